#include "ua/group_topology.hpp"

#include <sstream>
#include <stdexcept>

#include "ua/hom_push.hpp"

namespace ua {

FiniteGroup::FiniteGroup(FiniteAlgebra alg) : alg_(std::move(alg)), mul_op_(-1), inv_op_(-1) {
  const Signature& sig = alg_.signature();
  int e_op = -1;
  if (sig.op_count() != 3)
    throw std::invalid_argument("group signature needs exactly (mul/2, inv/1, e/0)");
  for (int i = 0; i < 3; ++i) {
    switch (sig.op(i).arity) {
      case 2: mul_op_ = i; break;
      case 1: inv_op_ = i; break;
      case 0: e_op = i; break;
      default: break;
    }
  }
  if (mul_op_ < 0 || inv_op_ < 0 || e_op < 0)
    throw std::invalid_argument("group signature needs arities 2, 1, 0");
  e_ = alg_.apply_code(e_op, 0);

  const int n = alg_.carrier_size();
  for (Elem a = 0; a < n; ++a) {
    if (mul(e_, a) != a || mul(a, e_) != a)
      throw std::invalid_argument("identity law fails");
    if (mul(a, inv(a)) != e_ || mul(inv(a), a) != e_)
      throw std::invalid_argument("inverse law fails");
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("associativity fails");
  }
}

NeighborhoodBase::NeighborhoodBase(const FiniteGroup& g, std::vector<Bitset> base_sets)
    : group(&g), sets(std::move(base_sets)) {
  if (sets.empty()) throw std::invalid_argument("neighborhood base must be nonempty");
  for (const auto& s : sets) {
    if (s.size() != static_cast<std::size_t>(g.order()))
      throw std::invalid_argument("neighborhood set size mismatch");
    if (!s.get(g.identity()))
      throw std::invalid_argument("every neighborhood must contain the identity");
  }
}

Bitset NeighborhoodBase::minimum() const {
  Bitset m = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) m &= sets[i];
  return m;
}

bool NeighborhoodBase::contains(const Bitset& n) const { return minimum().subset_of(n); }

Bitset parse_subset(const std::string& text, int carrier) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '{')
    throw std::invalid_argument("subset literal must start with '{'");
  ++pos;
  Bitset out(carrier);
  for (;;) {
    skip();
    if (pos >= text.size()) throw std::invalid_argument("subset literal missing '}'");
    if (text[pos] == '}') {
      ++pos;
      break;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("subset literal: index expected");
    int v = std::stoi(text.substr(start, pos - start));
    if (v < 0 || v >= carrier) throw std::invalid_argument("subset index out of carrier");
    out.set(v);
  }
  skip();
  if (pos != text.size()) throw std::invalid_argument("subset literal: trailing input");
  return out;
}

std::string subset_to_string(const Bitset& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.get(i)) {
      if (!first) os << ' ';
      first = false;
      os << i;
    }
  os << "}";
  return os.str();
}

NeighborhoodBase NeighborhoodBase::parse(const FiniteGroup& g, const std::string& literal) {
  std::vector<Bitset> sets;
  std::stringstream in(literal);
  std::string part;
  while (std::getline(in, part, '|'))
    if (part.find_first_not_of(" \t") != std::string::npos)
      sets.push_back(parse_subset(part, g.order()));
  return NeighborhoodBase(g, std::move(sets));
}

namespace {

Bitset set_product(const FiniteGroup& g, const Bitset& a, const Bitset& b) {
  Bitset out(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (a.get(x))
      for (int y = 0; y < g.order(); ++y)
        if (b.get(y)) out.set(g.mul(x, y));
  return out;
}

Bitset set_inverse(const FiniteGroup& g, const Bitset& a) {
  Bitset out(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (a.get(x)) out.set(g.inv(x));
  return out;
}

Bitset conjugate(const FiniteGroup& g, Elem a, const Bitset& n) {
  Bitset out(g.order());
  for (int x = 0; x < g.order(); ++x)
    if (n.get(x)) out.set(g.mul(g.mul(g.inv(a), x), a));
  return out;
}

}  // namespace

GroupAxiomReport check_group_axioms(const NeighborhoodBase& nb) {
  const FiniteGroup& g = *nb.group;
  GroupAxiomReport rep;
  Bitset m = nb.minimum();

  rep.g3 = true;
  Bitset mm = set_product(g, m, m);
  for (const auto& n : nb.sets)
    if (!mm.subset_of(n)) {
      rep.g3 = false;
      break;
    }

  rep.g4 = true;
  for (const auto& n : nb.sets)
    if (!nb.contains(set_inverse(g, n))) {
      rep.g4 = false;
      break;
    }

  rep.g5 = true;
  for (const auto& n : nb.sets)
    for (Elem a = 0; a < g.order() && rep.g5; ++a)
      if (!nb.contains(conjugate(g, a, n))) rep.g5 = false;

  rep.g5prime = true;
  for (const auto& n : nb.sets) {
    Bitset core = n;
    for (Elem a = 0; a < g.order(); ++a) core &= conjugate(g, a, n);
    if (!nb.contains(core)) {
      rep.g5prime = false;
      break;
    }
  }
  return rep;
}

namespace {

BitRelation n_left(const FiniteGroup& g, const Bitset& n) {
  BitRelation r(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (n.get(g.mul(g.inv(x), y))) r.set(x, y);  // y in xN
  return r;
}

BitRelation n_right(const FiniteGroup& g, const Bitset& n) {
  BitRelation r(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (n.get(g.mul(y, g.inv(x)))) r.set(x, y);  // y in Nx
  return r;
}

}  // namespace

RelationFilter left_relations(const NeighborhoodBase& nb) {
  std::vector<BitRelation> base;
  for (const auto& n : nb.sets) base.push_back(n_left(*nb.group, n));
  return RelationFilter(std::move(base));
}

RelationFilter right_relations(const NeighborhoodBase& nb) {
  std::vector<BitRelation> base;
  for (const auto& n : nb.sets) base.push_back(n_right(*nb.group, n));
  return RelationFilter(std::move(base));
}

GroupEquivalenceReport equivalence_theorem_check(const NeighborhoodBase& nb) {
  const FiniteGroup& g = *nb.group;
  GroupAxiomReport ax = check_group_axioms(nb);
  if (!ax.g3 || !ax.g4 || !ax.g5)
    throw std::invalid_argument("equivalence_theorem_check requires (G1)-(G5)");

  RelationFilter ul = left_relations(nb);
  RelationFilter ur = right_relations(nb);
  GroupEquivalenceReport rep;
  rep.items[0] = ur.leq(ul);
  rep.items[1] = ul.leq(ur);
  rep.items[2] = ul.cofinally_equal(ur);
  rep.items[3] = relation_compatible(g.algebra(), ul.minimum());
  rep.items[4] = relation_compatible(g.algebra(), ur.minimum());
  rep.items[5] = ax.g5prime;
  return rep;
}

bool left_invariant(const FiniteGroup& g, const BitRelation& u) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (Elem c = 0; c < g.order(); ++c)
        if (u.get(b, c) && !u.get(g.mul(a, b), g.mul(a, c))) return false;
  return true;
}

bool right_invariant(const FiniteGroup& g, const BitRelation& u) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (Elem c = 0; c < g.order(); ++c)
        if (u.get(b, c) && !u.get(g.mul(b, a), g.mul(c, a))) return false;
  return true;
}

Bitset delta_set(const FiniteGroup& g, const BitRelation& u, Side side) {
  Bitset out(g.order());
  for (Elem b = 0; b < g.order(); ++b)
    for (Elem c = 0; c < g.order(); ++c)
      if (u.get(b, c)) out.set(side == Side::left ? g.mul(g.inv(b), c) : g.mul(c, g.inv(b)));
  return out;
}

RelationFilter invariant_base(const FiniteGroup& g, const RelationFilter& u, Side side) {
  if (!u.check_axioms().uniformity() || !relation_compatible(g.algebra(), u.minimum()))
    throw std::invalid_argument("invariant_base requires a compatible uniformity");
  const BitRelation& translatable = u.minimum();
  // compatibility makes the minimum uniformly translatable: b U' c implies
  // ab U ac for every member U
  std::vector<BitRelation> base;
  for (const auto& rel : u.base()) {
    for (Elem a = 0; a < g.order(); ++a)
      for (Elem b = 0; b < g.order(); ++b)
        for (Elem c = 0; c < g.order(); ++c)
          if (translatable.get(b, c)) {
            bool ok = side == Side::left ? rel.get(g.mul(a, b), g.mul(a, c))
                                         : rel.get(g.mul(b, a), g.mul(c, a));
            if (!ok)
              throw std::invalid_argument("invariant_base: minimum is not translatable");
          }
    Bitset diff = delta_set(g, translatable, side);
    BitRelation v(g.order());
    for (Elem x = 0; x < g.order(); ++x)
      for (Elem y = 0; y < g.order(); ++y) {
        Elem d = side == Side::left ? g.mul(g.inv(x), y) : g.mul(y, g.inv(x));
        if (diff.get(d)) v.set(x, y);
      }
    base.push_back(std::move(v));
  }
  return RelationFilter(std::move(base));
}

}  // namespace ua
