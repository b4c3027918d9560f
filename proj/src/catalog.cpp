#include "ua/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace ua {

namespace {

std::vector<Elem> binary_table(int n, auto&& f) {
  std::vector<Elem> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a) * n + b] = f(a, b);
  return t;
}

std::vector<Elem> unary_table(int n, auto&& f) {
  std::vector<Elem> t(n);
  for (int a = 0; a < n; ++a) t[a] = f(a);
  return t;
}

// Group from a set of permutations closed under composition; elements are
// indexed by the lexicographic order of their permutation arrays.
FiniteAlgebra group_from_permutations(const std::string& name,
                                      std::vector<std::vector<int>> perms) {
  std::sort(perms.begin(), perms.end());
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  const int deg = static_cast<int>(perms[0].size());

  auto compose_perm = [&](int a, int b) {
    std::vector<int> c(deg);
    for (int x = 0; x < deg; ++x) c[x] = perms[a][perms[b][x]];
    auto it = index.find(c);
    if (it == index.end()) throw std::logic_error("permutation set not closed");
    return it->second;
  };
  auto invert_perm = [&](int a) {
    std::vector<int> c(deg);
    for (int x = 0; x < deg; ++x) c[perms[a][x]] = x;
    return index.at(c);
  };
  std::vector<int> id(deg);
  for (int x = 0; x < deg; ++x) id[x] = x;

  Signature sig({{"mul", 2}, {"inv", 1}, {"e", 0}});
  std::vector<std::vector<Elem>> tables = {
      binary_table(n, compose_perm), unary_table(n, invert_perm), {index.at(id)}};
  return FiniteAlgebra(name, std::move(sig), n, std::move(tables));
}

}  // namespace

FiniteAlgebra make_cyclic_group(int n) {
  Signature sig({{"add", 2}, {"neg", 1}, {"zero", 0}});
  std::vector<std::vector<Elem>> tables = {
      binary_table(n, [n](int a, int b) { return (a + b) % n; }),
      unary_table(n, [n](int a) { return (n - a) % n; }),
      {0}};
  return FiniteAlgebra("z" + std::to_string(n), std::move(sig), n, std::move(tables));
}

FiniteAlgebra make_zn_ring(int n) {
  Signature sig({{"add", 2}, {"neg", 1}, {"zero", 0}, {"mul", 2}});
  std::vector<std::vector<Elem>> tables = {
      binary_table(n, [n](int a, int b) { return (a + b) % n; }),
      unary_table(n, [n](int a) { return (n - a) % n; }),
      {0},
      binary_table(n, [n](int a, int b) { return (a * b) % n; })};
  return FiniteAlgebra("z" + std::to_string(n) + "ring", std::move(sig), n, std::move(tables));
}

FiniteAlgebra make_klein_four() {
  Signature sig({{"add", 2}, {"neg", 1}, {"zero", 0}});
  std::vector<std::vector<Elem>> tables = {
      binary_table(4, [](int a, int b) { return a ^ b; }),
      unary_table(4, [](int a) { return a; }),
      {0}};
  return FiniteAlgebra("klein4", std::move(sig), 4, std::move(tables));
}

FiniteAlgebra make_sym3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return group_from_permutations("s3", std::move(perms));
}

FiniteAlgebra make_dihedral4() {
  // rotations r^k: x -> x+k (mod 4); reflections s r^k: x -> k-x (mod 4)
  std::vector<std::vector<int>> perms;
  for (int k = 0; k < 4; ++k) {
    std::vector<int> rot(4), refl(4);
    for (int x = 0; x < 4; ++x) {
      rot[x] = (x + k) % 4;
      refl[x] = ((k - x) % 4 + 4) % 4;
    }
    perms.push_back(rot);
    perms.push_back(refl);
  }
  return group_from_permutations("d4", std::move(perms));
}

FiniteAlgebra make_lattice_chain2() {
  Signature sig({{"meet", 2}, {"join", 2}});
  std::vector<std::vector<Elem>> tables = {
      binary_table(2, [](int a, int b) { return a & b; }),
      binary_table(2, [](int a, int b) { return a | b; })};
  return FiniteAlgebra("lat2", std::move(sig), 2, std::move(tables));
}

FiniteAlgebra make_lattice_2x2() {
  // elements are bit pairs; meet/join componentwise
  Signature sig({{"meet", 2}, {"join", 2}});
  std::vector<std::vector<Elem>> tables = {
      binary_table(4, [](int a, int b) { return a & b; }),
      binary_table(4, [](int a, int b) { return a | b; })};
  return FiniteAlgebra("lat2x2", std::move(sig), 4, std::move(tables));
}

FiniteAlgebra make_empty_signature(int n) {
  return FiniteAlgebra("bare" + std::to_string(n), Signature(std::vector<OpSym>{}), n, {});
}

FiniteAlgebra make_catalog_algebra(const std::string& name) {
  if (name == "z2") return make_cyclic_group(2);
  if (name == "z3") return make_cyclic_group(3);
  if (name == "z4") return make_cyclic_group(4);
  if (name == "z6") return make_cyclic_group(6);
  if (name == "z8") return make_cyclic_group(8);
  if (name == "z2ring") return make_zn_ring(2);
  if (name == "z4ring") return make_zn_ring(4);
  if (name == "z6ring") return make_zn_ring(6);
  if (name == "klein4") return make_klein_four();
  if (name == "s3") return make_sym3();
  if (name == "d4") return make_dihedral4();
  if (name == "lat2") return make_lattice_chain2();
  if (name == "lat2x2") return make_lattice_2x2();
  throw std::invalid_argument("unknown catalog algebra " + name);
}

std::vector<std::string> catalog_names() {
  return {"z2", "z3", "z4", "z6", "z8", "z2ring", "z4ring", "z6ring",
          "klein4", "s3", "d4", "lat2", "lat2x2"};
}

Bitset subgroup_generate(const FiniteGroup& g, const std::vector<Elem>& gens) {
  Bitset h(g.order());
  std::vector<Elem> work;
  auto add = [&](Elem x) {
    if (!h.get(x)) {
      h.set(x);
      work.push_back(x);
    }
  };
  add(g.identity());
  for (Elem x : gens) add(x);
  while (!work.empty()) {
    Elem x = work.back();
    work.pop_back();
    add(g.inv(x));
    for (Elem y = 0; y < g.order(); ++y)
      if (h.get(y)) {
        add(g.mul(x, y));
        add(g.mul(y, x));
      }
  }
  return h;
}

std::vector<Bitset> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<std::size_t>> seen;
  std::vector<Bitset> out;
  std::vector<Bitset> frontier;
  Bitset trivial = subgroup_generate(g, {});
  seen.insert(trivial.members());
  out.push_back(trivial);
  frontier.push_back(trivial);
  while (!frontier.empty()) {
    std::vector<Bitset> next;
    for (const auto& h : frontier)
      for (Elem x = 0; x < g.order(); ++x) {
        if (h.get(x)) continue;
        std::vector<Elem> gens;
        for (auto m : h.members()) gens.push_back(static_cast<Elem>(m));
        gens.push_back(x);
        Bitset bigger = subgroup_generate(g, gens);
        if (seen.insert(bigger.members()).second) {
          out.push_back(bigger);
          next.push_back(bigger);
        }
      }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const Bitset& a, const Bitset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a.members() < b.members();
  });
  return out;
}

bool is_normal_subgroup(const FiniteGroup& g, const Bitset& h) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem x = 0; x < g.order(); ++x)
      if (h.get(x) && !h.get(g.mul(g.mul(g.inv(a), x), a))) return false;
  return true;
}

Bitset commutator_subgroup(const FiniteGroup& g, const Bitset& m, const Bitset& n) {
  std::vector<Elem> gens;
  for (Elem x = 0; x < g.order(); ++x)
    if (m.get(x))
      for (Elem y = 0; y < g.order(); ++y)
        if (n.get(y))
          gens.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  return subgroup_generate(g, gens);
}

Partition congruence_from_normal(const FiniteGroup& g, const Bitset& n) {
  UnionFind uf(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (n.get(g.mul(g.inv(x), y))) uf.unite(x, y);
  return Partition::from_union_find(uf);
}

Bitset normal_from_congruence(const FiniteGroup& g, const Partition& p) {
  Bitset n(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    if (p.same(x, g.identity())) n.set(x);
  return n;
}

}  // namespace ua
