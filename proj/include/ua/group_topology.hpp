#pragma once

#include <string>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/bits.hpp"
#include "ua/relfilter.hpp"

namespace ua {

/// A finite algebra whose signature is (mul/2, inv/1, e/0) with the group
/// laws verified exhaustively at construction.
class FiniteGroup {
 public:
  explicit FiniteGroup(FiniteAlgebra alg);

  const FiniteAlgebra& algebra() const { return alg_; }
  int order() const { return alg_.carrier_size(); }
  Elem mul(Elem a, Elem b) const {
    return alg_.apply_code(mul_op_, static_cast<Code>(a) * order() + b);
  }
  Elem inv(Elem a) const { return alg_.apply_code(inv_op_, a); }
  Elem identity() const { return e_; }

 private:
  FiniteAlgebra alg_;
  int mul_op_, inv_op_;
  Elem e_;
};

/// Neighborhood filter base at the identity: a finite collection of subsets,
/// each containing e. (G1)/(G2) hold by filter-base semantics; members are
/// supersets of intersections of base sets, with the full intersection as
/// the canonical minimum.
struct NeighborhoodBase {
  const FiniteGroup* group;
  std::vector<Bitset> sets;

  NeighborhoodBase(const FiniteGroup& g, std::vector<Bitset> base_sets);
  Bitset minimum() const;
  bool contains(const Bitset& n) const;  // n is a member of the filter

  /// "{0 3 5}" literals, '|'-separated for multiple base sets.
  static NeighborhoodBase parse(const FiniteGroup& g, const std::string& literal);
};

Bitset parse_subset(const std::string& text, int carrier);
std::string subset_to_string(const Bitset& s);

struct GroupAxiomReport {
  bool g3 = false, g4 = false, g5 = false, g5prime = false;
};

GroupAxiomReport check_group_axioms(const NeighborhoodBase& nb);

/// N_l = {(x,y) : y in xN}; N_r = {(x,y) : y in Nx}; one base relation per
/// base set.
RelationFilter left_relations(const NeighborhoodBase& nb);
RelationFilter right_relations(const NeighborhoodBase& nb);

struct GroupEquivalenceReport {
  // r<=l, l<=r, l=r, l compatible, r compatible, (G5')
  std::array<bool, 6> items{};
  bool all_same() const {
    for (bool b : items)
      if (b != items[0]) return false;
    return true;
  }
};

/// The six-way equivalence for the left/right uniformities of a compatible
/// topology. Requires (G1)-(G5); throws otherwise.
GroupEquivalenceReport equivalence_theorem_check(const NeighborhoodBase& nb);

enum class Side { left, right };

/// Rewrites u over a base of translation-invariant relations: per base U,
/// V = {(x,y) : x^{-1}y in delta(U')} (left) with delta(U') the difference
/// set of a uniformly-translatable member. Cofinally equal to u.
RelationFilter invariant_base(const FiniteGroup& g, const RelationFilter& u, Side side);

/// Difference-set extraction for translation-invariant relations.
Bitset delta_set(const FiniteGroup& g, const BitRelation& u, Side side);

bool left_invariant(const FiniteGroup& g, const BitRelation& u);
bool right_invariant(const FiniteGroup& g, const BitRelation& u);

}  // namespace ua
