#pragma once

#include <vector>

#include "ua/algebra.hpp"
#include "ua/commutator.hpp"
#include "ua/partition.hpp"

namespace ua {

/// Filter of congruences on a finite algebra, kept as a finite base. On a
/// finite algebra every such filter is principal; the canonical generator
/// is the meet of the base and cofinality equality compares those meets.
class CongruenceFilter {
 public:
  CongruenceFilter(const FiniteAlgebra& a, std::vector<Partition> base);

  const FiniteAlgebra& algebra() const { return *algebra_; }
  const std::vector<Partition>& base() const { return base_; }
  const Partition& minimum() const { return min_; }

  bool cofinally_equal(const CongruenceFilter& g) const { return min_ == g.min_; }
  bool leq(const CongruenceFilter& g) const { return min_.leq(g.min_); }

 private:
  const FiniteAlgebra* algebra_;
  std::vector<Partition> base_;
  Partition min_;
};

CongruenceFilter congruence_filter_meet(const CongruenceFilter& f, const CongruenceFilter& g);
CongruenceFilter congruence_filter_join(const CongruenceFilter& f, const CongruenceFilter& g);

/// [F,F'] with base {[alpha,beta] : alpha in F.base, beta in G.base}.
CongruenceFilter filter_commutator(const CongruenceFilter& f, const CongruenceFilter& g);

struct CUCommUReport {
  bool holds = false;   // [Ug F, Ug F'] <= Ug [F,F']
  bool strict = false;  // the inequality is strict on this instance
  Partition left;
  Partition right;
};

/// Both sides are principal on a finite algebra: left is the commutator of
/// the base meets, right is the meet of the pairwise commutators.
CUCommUReport cucommu_inequality_check(const CongruenceFilter& f, const CongruenceFilter& g);

}  // namespace ua
