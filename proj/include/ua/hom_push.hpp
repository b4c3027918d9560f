#pragma once

#include <utility>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/congruence.hpp"
#include "ua/partition.hpp"
#include "ua/relfilter.hpp"

namespace ua {

/// A(alpha): the subalgebra of A^2 of alpha-related pairs, with the two
/// projections and the diagonal embedding, all verified homomorphisms.
struct AAlpha {
  FiniteAlgebra algebra;                    // carrier = alpha-pairs, lexicographic
  std::vector<std::pair<Elem, Elem>> pair_of;  // element -> (left, right)
  Homomorphism pi;        // (a,b) -> a
  Homomorphism pi_prime;  // (a,b) -> b
  Homomorphism delta;     // a -> (a,a)

  Elem index_of(Elem left, Elem right) const;  // -1 when not alpha-related
};

AAlpha a_alpha(const FiniteAlgebra& a, const Partition& alpha);

/// f^{-1}(u) as a filter on the source: base = preimages of base elements.
RelationFilter preimage_filter(const Homomorphism& f, const RelationFilter& u);

/// Preimage of a single congruence along f (always a congruence on the source).
Partition preimage_congruence(const Homomorphism& f, const Partition& beta);

/// The union over all n, n', t of L_{f,n,n',t}(u): pairs
/// (t(b,f(a)), t(b,f(a'))) with the a-coordinates moving along u. Computed
/// as the closure of f(u) and the diagonal under componentwise operations
/// in B^2 (no symmetric or transitive closure). u must be reflexive.
BitRelation l_f_base(const Homomorphism& f, const BitRelation& u);

/// f_{*c}(u) for a compatible uniformity u on the source: base = per base
/// element U, the congruence generated (in the target) by l_f_base(f,U).
/// Equals the least compatible uniformity v with u <= f^{-1}(v).
RelationFilter pushforward(const Homomorphism& f, const RelationFilter& u);

/// Congruence-level pushforward: Cg^B(f(alpha)).
Partition pushforward_congruence(const Homomorphism& f, const Partition& alpha);

/// Compatibility of a relation: closure under componentwise operations
/// (i.e. the relation is a subuniverse of A^2).
bool relation_compatible(const FiniteAlgebra& a, const BitRelation& r);

/// Least congruence containing rho, computed at the relation level: fixpoint
/// of reflexive, symmetric, transitive and componentwise-operation closure.
/// An independent route to Cg(rho) used by the Ug{rho} = Ug{Cg rho} checks.
BitRelation compatible_equivalence_closure(const FiniteAlgebra& a, const BitRelation& rho);

}  // namespace ua
