#include "ua/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ua {

bool is_congruence(const FiniteAlgebra& a, const Partition& p) {
  if (p.carrier_size() != a.carrier_size())
    throw std::invalid_argument("partition carrier does not match algebra");
  const int n = a.carrier_size();
  std::vector<Elem> args;
  for (int op = 0; op < a.signature().op_count(); ++op) {
    const int r = a.signature().op(op).arity;
    if (r == 0) continue;
    std::size_t tuples = 1;
    for (int i = 0; i < r; ++i) tuples *= n;
    args.assign(r, 0);
    for (std::size_t code = 0; code < tuples; ++code) {
      decode_tuple(code, r, n, args.data());
      Elem base_val = a.apply_code(op, code);
      for (int pos = 0; pos < r; ++pos) {
        Elem orig = args[pos];
        for (Elem alt = 0; alt < n; ++alt) {
          if (alt == orig || !p.same(orig, alt)) continue;
          args[pos] = alt;
          if (!p.same(base_val, a.apply(op, args))) return false;
        }
        args[pos] = orig;
      }
    }
  }
  return true;
}

namespace {

// Core of Cg: union-find plus a worklist of merged pairs; each merged pair
// is translated through every basic operation, one coordinate at a time,
// with all constant fillings of the remaining coordinates.
Partition cg_close(const FiniteAlgebra& a, UnionFind uf,
                   std::deque<std::pair<Elem, Elem>> work) {
  const int n = a.carrier_size();
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (int op = 0; op < a.signature().op_count(); ++op) {
      const int r = a.signature().op(op).arity;
      if (r == 0) continue;
      std::vector<Elem> args(r, 0);
      std::size_t fillings = 1;
      for (int i = 0; i < r - 1; ++i) fillings *= n;
      for (int pos = 0; pos < r; ++pos) {
        for (std::size_t fill = 0; fill < fillings; ++fill) {
          Code c = fill;
          for (int j = r - 1; j >= 0; --j) {
            if (j == pos) continue;
            args[j] = static_cast<Elem>(c % n);
            c /= n;
          }
          args[pos] = x;
          Elem tx = a.apply(op, args);
          args[pos] = y;
          Elem ty = a.apply(op, args);
          if (uf.unite(tx, ty)) work.emplace_back(tx, ty);
        }
      }
    }
  }
  return Partition::from_union_find(uf);
}

}  // namespace

Partition cg(const FiniteAlgebra& a, const std::vector<std::pair<Elem, Elem>>& pairs) {
  const int n = a.carrier_size();
  UnionFind uf(n);
  std::deque<std::pair<Elem, Elem>> work;
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("cg: pair element out of carrier range");
    if (uf.unite(x, y)) work.emplace_back(x, y);
  }
  return cg_close(a, std::move(uf), std::move(work));
}

Partition cg_extend(const FiniteAlgebra& a, const Partition& base,
                    const std::vector<std::pair<Elem, Elem>>& pairs) {
  const int n = a.carrier_size();
  if (base.carrier_size() != n) throw std::invalid_argument("cg_extend: carrier mismatch");
  UnionFind uf(n);
  for (int i = 0; i < n; ++i) uf.unite(i, base.find(i));
  std::deque<std::pair<Elem, Elem>> work;
  for (auto [x, y] : pairs)
    if (uf.unite(x, y)) work.emplace_back(x, y);
  return cg_close(a, std::move(uf), std::move(work));
}

Partition congruence_join(const FiniteAlgebra& a, const Partition& p, const Partition& q) {
  (void)a;  // the equivalence join of congruences is already compatible
  return join(p, q);
}

namespace {

bool canonical_less(const Partition& p, const Partition& q) {
  if (p.block_count() != q.block_count()) return p.block_count() > q.block_count();
  return p.parents() < q.parents();
}

}  // namespace

int CongruenceLattice::index_of(const Partition& p) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == p) return static_cast<int>(i);
  return -1;
}

CongruenceLattice con_all(const FiniteAlgebra& a) {
  const int n = a.carrier_size();
  if (static_cast<std::size_t>(n) > limits::max_carrier())
    throw cap_error("con_all carrier cap exceeded");

  // principal congruences; the pair sweeps are independent
  std::vector<std::pair<Elem, Elem>> seeds;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y) seeds.emplace_back(x, y);
  std::vector<Partition> principals(seeds.size(), Partition(1));
#pragma omp parallel for schedule(dynamic) if (seeds.size() > 64)
  for (std::size_t i = 0; i < seeds.size(); ++i)
    principals[i] = cg(a, {seeds[i]});

  std::set<std::vector<int>> seen;
  std::vector<Partition> elems;
  auto add = [&](const Partition& p) {
    if (seen.insert(p.parents()).second) {
      elems.push_back(p);
      return true;
    }
    return false;
  };
  add(Partition(n));
  for (const auto& p : principals) add(p);

  // close under join
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(join(elems[i], elems[j]));

  std::sort(elems.begin(), elems.end(), canonical_less);

  // meets of congruences are congruences; confirm closure anyway
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Partition m = meet(elems[i], elems[j]);
      if (!seen.count(m.parents()))
        throw std::logic_error("congruence lattice not meet-closed");
    }
  return CongruenceLattice{std::move(elems)};
}

LatticeLawReport lattice_law_check(const CongruenceLattice& lat) {
  LatticeLawReport rep{true, true};
  const auto& e = lat.elements;
  for (const auto& x : e)
    for (const auto& y : e)
      for (const auto& z : e) {
        if (x.leq(z)) {
          if (!(join(x, meet(y, z)) == meet(join(x, y), z))) rep.modular = false;
        }
        if (!(meet(x, join(y, z)) == join(meet(x, y), meet(x, z)))) rep.distributive = false;
      }
  return rep;
}

std::pair<FiniteAlgebra, Homomorphism> quotient(const FiniteAlgebra& a, const Partition& alpha) {
  if (!is_congruence(a, alpha))
    throw std::invalid_argument("quotient: partition is not a congruence");
  const int n = a.carrier_size();
  std::vector<int> block_index(n, -1);
  std::vector<Elem> reps;
  for (int i = 0; i < n; ++i)
    if (alpha.find(i) == i) {
      block_index[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  const int q = static_cast<int>(reps.size());
  std::vector<Elem> nat(n);
  for (int i = 0; i < n; ++i) nat[i] = block_index[alpha.find(i)];

  std::vector<std::vector<Elem>> tables;
  std::vector<Elem> args;
  for (int op = 0; op < a.signature().op_count(); ++op) {
    const int r = a.signature().op(op).arity;
    std::size_t entries = 1;
    for (int i = 0; i < r; ++i) entries *= static_cast<std::size_t>(q);
    std::vector<Elem> table(entries);
    args.assign(r, 0);
    std::vector<Elem> block(r);
    for (std::size_t code = 0; code < entries; ++code) {
      decode_tuple(code, r, q, block.data());
      for (int j = 0; j < r; ++j) args[j] = reps[block[j]];
      table[code] = nat[a.apply(op, args)];
    }
    tables.push_back(std::move(table));
  }
  FiniteAlgebra quot(a.name() + "/" + std::to_string(alpha.block_count()) + "blk",
                     a.signature(), q, std::move(tables));
  Homomorphism natural(a, quot, std::move(nat));
  return {std::move(quot), std::move(natural)};
}

Partition kernel(const Homomorphism& f) {
  UnionFind uf(f.source().carrier_size());
  std::map<Elem, Elem> first_preimage;
  for (Elem x = 0; x < f.source().carrier_size(); ++x) {
    auto [it, fresh] = first_preimage.emplace(f(x), x);
    if (!fresh) uf.unite(it->second, x);
  }
  return Partition::from_union_find(uf);
}

}  // namespace ua
