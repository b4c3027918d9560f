#pragma once

#include <optional>
#include <vector>

#include "ua/bitrel.hpp"

namespace ua {

struct AxiomReport {
  bool u1 = false, u2 = false, u3 = false, u4 = false, u5 = false;
  bool semiuniformity() const { return u1 && u2 && u3 && u4; }
  bool uniformity() const { return semiuniformity() && u5; }
};

/// Finite-base filter of binary relations on a fixed carrier. Membership is
/// semantic: U belongs iff U contains a finite intersection of base
/// elements; the intersection of the whole base is the least member and the
/// canonical witness for every containment question. Equality of filters is
/// mutual cofinality, decided through that minimum.
class RelationFilter {
 public:
  explicit RelationFilter(std::vector<BitRelation> base);
  static RelationFilter principal(BitRelation r);

  int carrier_size() const { return minimum_.carrier_size(); }
  const std::vector<BitRelation>& base() const { return base_; }
  const BitRelation& minimum() const { return minimum_; }

  bool contains(const BitRelation& u) const;

  /// Filter order (reverse inclusion of member sets): f <= g iff every
  /// member of g is a member of f, iff min(f) is contained in min(g).
  bool leq(const RelationFilter& g) const;
  bool cofinally_equal(const RelationFilter& g) const;

  AxiomReport check_axioms() const;

 private:
  std::vector<BitRelation> base_;
  BitRelation minimum_;
};

RelationFilter filter_meet(const RelationFilter& f, const RelationFilter& g);
RelationFilter filter_join(const RelationFilter& f, const RelationFilter& g);
RelationFilter circ_filter(const RelationFilter& f, const RelationFilter& g);

/// Join in the lattice of uniformities (not the filter join): on a finite
/// carrier a uniformity is principal over an equivalence, and the join is
/// generated by the equivalence join of the minima.
RelationFilter uniformity_join(const RelationFilter& f, const RelationFilter& g);

/// Evaluates both sides of "f v g = f o g iff g o f <= f o g" and returns
/// whether the biconditional holds. Inputs must pass check_axioms as
/// uniformities.
bool semipermute_join_check(const RelationFilter& f, const RelationFilter& g);

/// Some finite intersection V of base elements of f with V^n inside u, or
/// nullopt if none exists; throws if u is not a member of f.
std::optional<BitRelation> nth_root(const BitRelation& u, int n, const RelationFilter& f);

}  // namespace ua
