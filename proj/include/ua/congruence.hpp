#pragma once

#include <utility>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/partition.hpp"

namespace ua {

/// Compatibility check: single-coordinate translations preserve p. For an
/// equivalence this is equivalent to full compatibility.
bool is_congruence(const FiniteAlgebra& a, const Partition& p);

/// Least congruence of a containing the given pairs. Worklist algorithm:
/// every merged pair is pushed through every single-coordinate basic-op
/// translation (unary polynomials arise by iteration).
Partition cg(const FiniteAlgebra& a, const std::vector<std::pair<Elem, Elem>>& pairs);

/// cg seeded from an existing congruence: least congruence containing both
/// base and the new pairs. base must already be a congruence of a.
Partition cg_extend(const FiniteAlgebra& a, const Partition& base,
                    const std::vector<std::pair<Elem, Elem>>& pairs);

/// Join of two congruences: the equivalence join (transitive closure of the
/// union), which is automatically compatible.
Partition congruence_join(const FiniteAlgebra& a, const Partition& p, const Partition& q);

/// All congruences of a, canonically ordered (finer first; ties broken by
/// the canonical literal). Computed from principal congruences closed under
/// join; verified closed under meet.
struct CongruenceLattice {
  std::vector<Partition> elements;

  int index_of(const Partition& p) const;
  const Partition& bottom() const { return elements.front(); }
  const Partition& top() const { return elements.back(); }
};

CongruenceLattice con_all(const FiniteAlgebra& a);

struct LatticeLawReport {
  bool modular = false;
  bool distributive = false;
};

/// Exhaustive check of the modular and distributive laws over all triples.
LatticeLawReport lattice_law_check(const CongruenceLattice& lat);

/// Quotient algebra A/alpha with blocks as elements (indexed by sorted
/// least representatives) and the natural map.
std::pair<FiniteAlgebra, Homomorphism> quotient(const FiniteAlgebra& a, const Partition& alpha);

Partition kernel(const Homomorphism& f);

}  // namespace ua
