#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/clone.hpp"
#include "ua/congruence.hpp"
#include "ua/hom_push.hpp"
#include "ua/partition.hpp"

namespace ua {

/// M(alpha,beta): the subalgebra of A^4 generated by the alpha-rows
/// (a,a,a',a') and beta-columns (b,b',b,b'). Elements are 4-tuple codes
/// (u11,u12,u21,u22); this equals the union of all M_{n,n',t}(alpha,beta)
/// since every generated element is a componentwise term image of
/// generators and conversely.
struct MatrixSubalgebra {
  int carrier = 0;  // carrier of the base algebra
  Partition alpha;
  Partition beta;
  std::vector<Code> codes;  // sorted

  std::array<Elem, 4> entries(Code c) const {
    const Code n = static_cast<Code>(carrier);
    return {static_cast<Elem>(c / (n * n * n)), static_cast<Elem>((c / (n * n)) % n),
            static_cast<Elem>((c / n) % n), static_cast<Elem>(c % n)};
  }
};

MatrixSubalgebra m_matrices(const FiniteAlgebra& a, const Partition& alpha,
                            const Partition& beta);

struct CentralizationReport {
  bool holds = false;
  std::optional<std::array<Elem, 4>> witness;  // least violating matrix (u11,u12,u21,u22)
};

/// C(alpha,beta;delta): for every matrix, u11 delta u12 implies u21 delta u22.
CentralizationReport centralizes(const FiniteAlgebra& a, const Partition& alpha,
                                 const Partition& beta, const Partition& delta);

/// Weak condition: u11 = u12 implies u21 delta u22.
CentralizationReport weak_centralizes(const FiniteAlgebra& a, const Partition& alpha,
                                      const Partition& beta, const Partition& delta);

/// Least delta satisfying the term condition, by the fixpoint
/// delta <- Cg(delta u {(u21,u22) : u11 delta u12}); finite carriers
/// stabilize within carrier-many rounds.
Partition c_commutator(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta);

/// Least delta satisfying the weak term condition: Cg of the u11 = u12 rows.
Partition weak_c_commutator(const FiniteAlgebra& a, const Partition& alpha,
                            const Partition& beta);

/// Pairs (m_i(a,b,d,c), m_i(a,a,c,c)) over the Day chain and all matrices
/// (a b; c d) — third and fourth arguments deliberately swapped.
BitRelation x_m_extract(const FiniteAlgebra& a, const TermWitness& day,
                        const MatrixSubalgebra& m);

/// Cg of the extracted pairs: the Day-term route to the commutator.
Partition commutator_via_xm(const FiniteAlgebra& a, const TermWitness& day,
                            const Partition& alpha, const Partition& beta);

/// Delta_{alpha,beta}: the congruence on A(alpha) generated by the diagonal
/// beta-pairs ((a,a),(b,b)) for a beta b.
Partition delta_alpha_beta(const AAlpha& actx, const Partition& beta);
Partition delta_alpha_beta(const FiniteAlgebra& a, const Partition& alpha,
                           const Partition& beta);

/// The A(alpha) route: project (Delta_{alpha,beta} ^ ker pi) v ker pi' along
/// pi'. Requires a congruence-modular context (caller asserts); the
/// projection is verified to be a congruence.
Partition commutator_via_delta(const FiniteAlgebra& a, const Partition& alpha,
                               const Partition& beta);

struct EquivSuiteReport {
  // xm(a,b) <= d, xm(b,a) <= d, C(a,b;d), C(b,a;d), weak C(a,b;d), weak C(b,a;d)
  std::array<bool, 6> items{};
  bool all_same() const {
    for (bool b : items)
      if (b != items[0]) return false;
    return true;
  }
};

EquivSuiteReport equivalence_suite(const FiniteAlgebra& a, const TermWitness& day,
                                   const Partition& alpha, const Partition& beta,
                                   const Partition& delta);

struct PropertySuiteReport {
  bool symmetry = true;
  bool monotone = true;
  bool below_meet = true;
  bool additive_when_permuting = true;
  bool preimage_leq = true;
  int pairs = 0;
  int additivity_cases = 0;
  int preimage_cases = 0;
  bool ok() const {
    return symmetry && monotone && below_meet && additive_when_permuting && preimage_leq;
  }
};

/// Symmetry, monotonicity, [a,b] <= a^b over all of Con A; finite additivity
/// over permuting pairs; and the preimage inequality for each supplied
/// homomorphism into a.
PropertySuiteReport property_suite(const FiniteAlgebra& a, const TermWitness& day,
                                   const std::vector<Homomorphism>& into_a = {});

bool congruences_permute(const Partition& p, const Partition& q);

}  // namespace ua
