#include "ua/hom_push.hpp"

#include <algorithm>
#include <stdexcept>

#include "ua/closure.hpp"

namespace ua {

Elem AAlpha::index_of(Elem left, Elem right) const {
  auto it = std::lower_bound(pair_of.begin(), pair_of.end(), std::make_pair(left, right));
  if (it == pair_of.end() || *it != std::make_pair(left, right)) return -1;
  return static_cast<Elem>(it - pair_of.begin());
}

AAlpha a_alpha(const FiniteAlgebra& a, const Partition& alpha) {
  if (!is_congruence(a, alpha))
    throw std::invalid_argument("a_alpha: alpha is not a congruence");
  const int n = a.carrier_size();

  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (alpha.same(x, y)) pairs.emplace_back(x, y);
  // lexicographic order is already sorted by construction
  const int m = static_cast<int>(pairs.size());
  if (static_cast<std::size_t>(m) > limits::max_power_carrier())
    throw cap_error("A(alpha) carrier cap exceeded");

  std::vector<int> index(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < m; ++i)
    index[static_cast<std::size_t>(pairs[i].first) * n + pairs[i].second] = i;

  std::vector<std::vector<Elem>> tables;
  std::vector<Elem> largs, rargs;
  for (int op = 0; op < a.signature().op_count(); ++op) {
    const int r = a.signature().op(op).arity;
    std::size_t entries = 1;
    for (int i = 0; i < r; ++i) {
      entries *= static_cast<std::size_t>(m);
      if (entries > limits::max_table_entries()) throw cap_error("A(alpha) table cap exceeded");
    }
    std::vector<Elem> table(entries);
    largs.assign(r, 0);
    rargs.assign(r, 0);
    std::vector<Elem> operand(r);
    for (std::size_t code = 0; code < entries; ++code) {
      decode_tuple(code, r, m, operand.data());
      for (int j = 0; j < r; ++j) {
        largs[j] = pairs[operand[j]].first;
        rargs[j] = pairs[operand[j]].second;
      }
      int out = index[static_cast<std::size_t>(a.apply(op, largs)) * n + a.apply(op, rargs)];
      if (out < 0) throw std::logic_error("a_alpha: operations left A(alpha)");
      table[code] = out;
    }
    tables.push_back(std::move(table));
  }
  FiniteAlgebra aa(a.name() + "(alpha)", a.signature(), m, std::move(tables));

  std::vector<Elem> pi_map(m), pip_map(m);
  for (int i = 0; i < m; ++i) {
    pi_map[i] = pairs[i].first;
    pip_map[i] = pairs[i].second;
  }
  std::vector<Elem> delta_map(n);
  for (Elem x = 0; x < n; ++x) delta_map[x] = index[static_cast<std::size_t>(x) * n + x];

  Homomorphism pi(aa, a, std::move(pi_map));
  Homomorphism pip(aa, a, std::move(pip_map));
  Homomorphism delta(a, aa, std::move(delta_map));
  return AAlpha{std::move(aa), std::move(pairs), std::move(pi), std::move(pip),
                std::move(delta)};
}

RelationFilter preimage_filter(const Homomorphism& f, const RelationFilter& u) {
  if (u.carrier_size() != f.target().carrier_size())
    throw std::invalid_argument("preimage_filter: filter lives on the wrong carrier");
  const int nb = f.source().carrier_size();
  std::vector<BitRelation> base;
  for (const auto& rel : u.base()) {
    BitRelation pre(nb);
    for (int x = 0; x < nb; ++x)
      for (int y = 0; y < nb; ++y)
        if (rel.get(f(x), f(y))) pre.set(x, y);
    base.push_back(std::move(pre));
  }
  return RelationFilter(std::move(base));
}

Partition preimage_congruence(const Homomorphism& f, const Partition& beta) {
  if (beta.carrier_size() != f.target().carrier_size())
    throw std::invalid_argument("preimage_congruence: carrier mismatch");
  const int nb = f.source().carrier_size();
  UnionFind uf(nb);
  std::vector<int> rep_of_block(f.target().carrier_size(), -1);
  for (int x = 0; x < nb; ++x) {
    int blk = beta.find(f(x));
    if (rep_of_block[blk] < 0)
      rep_of_block[blk] = x;
    else
      uf.unite(rep_of_block[blk], x);
  }
  return Partition::from_union_find(uf);
}

BitRelation l_f_base(const Homomorphism& f, const BitRelation& u) {
  if (u.carrier_size() != f.source().carrier_size())
    throw std::invalid_argument("l_f_base: relation lives on the wrong carrier");
  if (!u.reflexive()) throw std::invalid_argument("l_f_base: relation must be reflexive");
  const FiniteAlgebra& b = f.target();
  const int nb = b.carrier_size();

  std::vector<Code> gens;
  for (auto [x, y] : u.pairs())
    gens.push_back(static_cast<Code>(f(x)) * nb + f(y));
  for (Elem z = 0; z < nb; ++z) gens.push_back(static_cast<Code>(z) * nb + z);

  BitRelation out(nb);
  for (Code c : product_closure(b, 2, std::move(gens)))
    out.set(static_cast<int>(c / nb), static_cast<int>(c % nb));
  return out;
}

bool relation_compatible(const FiniteAlgebra& a, const BitRelation& r) {
  auto prs = r.pairs();
  if (prs.empty()) return true;
  std::vector<Elem> largs, rargs;
  for (int op = 0; op < a.signature().op_count(); ++op) {
    const int arity = a.signature().op(op).arity;
    if (arity == 0) continue;
    largs.assign(arity, 0);
    rargs.assign(arity, 0);
    std::vector<std::size_t> idx(arity, 0);
    for (;;) {
      for (int j = 0; j < arity; ++j) {
        largs[j] = prs[idx[j]].first;
        rargs[j] = prs[idx[j]].second;
      }
      if (!r.get(a.apply(op, largs), a.apply(op, rargs))) return false;
      int j = arity - 1;
      while (j >= 0 && ++idx[j] == prs.size()) idx[j--] = 0;
      if (j < 0) break;
    }
  }
  return true;
}

RelationFilter pushforward(const Homomorphism& f, const RelationFilter& u) {
  if (u.carrier_size() != f.source().carrier_size())
    throw std::invalid_argument("pushforward: filter lives on the wrong carrier");
  if (!u.check_axioms().uniformity() || !relation_compatible(f.source(), u.minimum()))
    throw std::invalid_argument("pushforward requires a compatible uniformity");
  std::vector<BitRelation> base;
  for (const auto& rel : u.base()) {
    BitRelation l = l_f_base(f, rel);
    base.push_back(cg(f.target(), l.pairs()).to_relation());
  }
  return RelationFilter(std::move(base));
}

Partition pushforward_congruence(const Homomorphism& f, const Partition& alpha) {
  std::vector<std::pair<Elem, Elem>> image;
  for (auto [x, y] : alpha.nondiagonal_pairs()) image.emplace_back(f(x), f(y));
  return cg(f.target(), image);
}

BitRelation compatible_equivalence_closure(const FiniteAlgebra& a, const BitRelation& rho) {
  if (rho.carrier_size() != a.carrier_size())
    throw std::invalid_argument("carrier mismatch");
  BitRelation acc = rho | BitRelation::diagonal(a.carrier_size());
  for (;;) {
    BitRelation next = acc | acc.inverse() | compose(acc, acc);
    // one componentwise-operation sweep
    auto prs = next.pairs();
    std::vector<Code> gens;
    for (auto [x, y] : prs)
      gens.push_back(static_cast<Code>(x) * a.carrier_size() + y);
    for (Code c : product_closure(a, 2, std::move(gens)))
      next.set(static_cast<int>(c / a.carrier_size()),
               static_cast<int>(c % a.carrier_size()));
    if (next == acc) return acc;
    acc = std::move(next);
  }
}

}  // namespace ua
