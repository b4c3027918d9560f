#include "ua/commutator.hpp"

#include <algorithm>
#include <limits>

#include "ua/closure.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ua {

MatrixSubalgebra m_matrices(const FiniteAlgebra& a, const Partition& alpha,
                            const Partition& beta) {
  const int n = a.carrier_size();
  if (!is_congruence(a, alpha) || !is_congruence(a, beta))
    throw std::invalid_argument("m_matrices: arguments must be congruences");
  const Code cn = static_cast<Code>(n);
  std::vector<Code> gens;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (alpha.same(x, y))  // alpha-row (x,x,y,y)
        gens.push_back(((static_cast<Code>(x) * cn + x) * cn + y) * cn + y);
      if (beta.same(x, y))  // beta-column (x,y,x,y)
        gens.push_back(((static_cast<Code>(x) * cn + y) * cn + x) * cn + y);
    }
  std::vector<Code> codes = product_closure(a, 4, std::move(gens));
  return MatrixSubalgebra{n, alpha, beta, std::move(codes)};
}

namespace {

// Shared scan: least violating matrix under the chosen row hypothesis.
template <typename RowHypothesis>
CentralizationReport scan_matrices(const MatrixSubalgebra& m, const Partition& delta,
                                   RowHypothesis&& hyp) {
  const Code none = std::numeric_limits<Code>::max();
  Code best = none;
  const std::size_t total = m.codes.size();
#pragma omp parallel for schedule(static) reduction(min : best) if (total > 4096)
  for (std::size_t i = 0; i < total; ++i) {
    Code c = m.codes[i];
    auto [u11, u12, u21, u22] = m.entries(c);
    if (hyp(u11, u12) && !delta.same(u21, u22) && c < best) best = c;
  }
  CentralizationReport rep;
  rep.holds = best == none;
  if (!rep.holds) rep.witness = m.entries(best);
  return rep;
}

std::vector<std::pair<Elem, Elem>> violating_rows(const MatrixSubalgebra& m,
                                                  const Partition& delta) {
  const int n = delta.carrier_size();
  Bitset seen(static_cast<std::size_t>(n) * n);
  std::vector<std::pair<Elem, Elem>> out;
  const std::size_t total = m.codes.size();
#pragma omp parallel if (total > 4096)
  {
    std::vector<std::pair<Elem, Elem>> local;
#pragma omp for schedule(static) nowait
    for (std::size_t i = 0; i < total; ++i) {
      auto [u11, u12, u21, u22] = m.entries(m.codes[i]);
      if (delta.same(u11, u12) && !delta.same(u21, u22))
        local.emplace_back(u21, u22);
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  // dedupe; congruence closure is order-independent
  std::vector<std::pair<Elem, Elem>> dedup;
  for (auto [x, y] : out)
    if (seen.claim(static_cast<std::size_t>(x) * n + y)) dedup.emplace_back(x, y);
  return dedup;
}

}  // namespace

CentralizationReport centralizes(const FiniteAlgebra& a, const Partition& alpha,
                                 const Partition& beta, const Partition& delta) {
  MatrixSubalgebra m = m_matrices(a, alpha, beta);
  return scan_matrices(m, delta,
                       [&delta](Elem x, Elem y) { return delta.same(x, y); });
}

CentralizationReport weak_centralizes(const FiniteAlgebra& a, const Partition& alpha,
                                      const Partition& beta, const Partition& delta) {
  MatrixSubalgebra m = m_matrices(a, alpha, beta);
  return scan_matrices(m, delta, [](Elem x, Elem y) { return x == y; });
}

Partition c_commutator(const FiniteAlgebra& a, const Partition& alpha, const Partition& beta) {
  MatrixSubalgebra m = m_matrices(a, alpha, beta);
  Partition delta(a.carrier_size());
  for (;;) {
    auto rows = violating_rows(m, delta);
    if (rows.empty()) return delta;
    delta = cg_extend(a, delta, rows);
  }
}

Partition weak_c_commutator(const FiniteAlgebra& a, const Partition& alpha,
                            const Partition& beta) {
  MatrixSubalgebra m = m_matrices(a, alpha, beta);
  std::vector<std::pair<Elem, Elem>> rows;
  for (Code c : m.codes) {
    auto [u11, u12, u21, u22] = m.entries(c);
    if (u11 == u12) rows.emplace_back(u21, u22);
  }
  return cg(a, rows);
}

BitRelation x_m_extract(const FiniteAlgebra& a, const TermWitness& day,
                        const MatrixSubalgebra& m) {
  if (day.kind != WitnessKind::day)
    throw std::invalid_argument("x_m_extract needs a Day witness");
  std::string err = verify_witness(a, day);
  if (!err.empty()) throw std::invalid_argument("x_m_extract: unverified witness: " + err);
  const int n = a.carrier_size();
  const Code cn = static_cast<Code>(n);
  BitRelation out(n);
  for (const auto& mi : day.chain) {
    const std::vector<Elem>& t = mi.table;
    for (Code c : m.codes) {
      auto [u11, u12, u21, u22] = m.entries(c);
      // matrix (a b; c d) contributes (m_i(a,b,d,c), m_i(a,a,c,c))
      Elem lhs = t[((static_cast<Code>(u11) * cn + u12) * cn + u22) * cn + u21];
      Elem rhs = t[((static_cast<Code>(u11) * cn + u11) * cn + u21) * cn + u21];
      out.set(lhs, rhs);
    }
  }
  return out;
}

Partition commutator_via_xm(const FiniteAlgebra& a, const TermWitness& day,
                            const Partition& alpha, const Partition& beta) {
  MatrixSubalgebra m = m_matrices(a, alpha, beta);
  BitRelation pairs = x_m_extract(a, day, m);
  return cg(a, pairs.pairs());
}

Partition delta_alpha_beta(const AAlpha& actx, const Partition& beta) {
  const FiniteAlgebra& aa = actx.algebra;
  std::vector<std::pair<Elem, Elem>> diag_pairs;
  const int n = beta.carrier_size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (x != y && beta.same(x, y)) {
        Elem dx = actx.index_of(x, x);
        Elem dy = actx.index_of(y, y);
        diag_pairs.emplace_back(dx, dy);
      }
  return cg(aa, diag_pairs);
}

Partition delta_alpha_beta(const FiniteAlgebra& a, const Partition& alpha,
                           const Partition& beta) {
  return delta_alpha_beta(a_alpha(a, alpha), beta);
}

Partition commutator_via_delta(const FiniteAlgebra& a, const Partition& alpha,
                               const Partition& beta) {
  AAlpha actx = a_alpha(a, alpha);
  Partition dab = delta_alpha_beta(actx, beta);
  Partition ker_pi = kernel(actx.pi);
  Partition ker_pip = kernel(actx.pi_prime);
  Partition kappa = congruence_join(actx.algebra, meet(dab, ker_pi), ker_pip);
  if (!ker_pip.leq(kappa))
    throw std::logic_error("commutator_via_delta: kappa does not absorb ker pi'");

  UnionFind uf(a.carrier_size());
  for (Elem u = 0; u < actx.algebra.carrier_size(); ++u)
    uf.unite(actx.pi_prime(u), actx.pi_prime(kappa.find(u)));
  Partition out = Partition::from_union_find(uf);
  if (!is_congruence(a, out))
    throw std::logic_error("commutator_via_delta: projection is not a congruence "
                           "(input not congruence-modular?)");
  return out;
}

EquivSuiteReport equivalence_suite(const FiniteAlgebra& a, const TermWitness& day,
                                   const Partition& alpha, const Partition& beta,
                                   const Partition& delta) {
  EquivSuiteReport rep;
  MatrixSubalgebra mab = m_matrices(a, alpha, beta);
  MatrixSubalgebra mba = m_matrices(a, beta, alpha);
  auto leq_delta = [&delta](const BitRelation& r) {
    for (auto [x, y] : r.pairs())
      if (!delta.same(x, y)) return false;
    return true;
  };
  rep.items[0] = leq_delta(x_m_extract(a, day, mab));
  rep.items[1] = leq_delta(x_m_extract(a, day, mba));
  rep.items[2] = scan_matrices(mab, delta, [&delta](Elem x, Elem y) {
                   return delta.same(x, y);
                 }).holds;
  rep.items[3] = scan_matrices(mba, delta, [&delta](Elem x, Elem y) {
                   return delta.same(x, y);
                 }).holds;
  rep.items[4] = scan_matrices(mab, delta, [](Elem x, Elem y) { return x == y; }).holds;
  rep.items[5] = scan_matrices(mba, delta, [](Elem x, Elem y) { return x == y; }).holds;
  return rep;
}

bool congruences_permute(const Partition& p, const Partition& q) {
  BitRelation rp = p.to_relation();
  BitRelation rq = q.to_relation();
  return compose(rp, rq) == compose(rq, rp);
}

PropertySuiteReport property_suite(const FiniteAlgebra& a, const TermWitness& day,
                                   const std::vector<Homomorphism>& into_a) {
  std::string err = verify_witness(a, day);
  if (!err.empty())
    throw std::invalid_argument("property_suite: invalid Day witness: " + err);

  PropertySuiteReport rep;
  CongruenceLattice lat = con_all(a);
  const auto& cons = lat.elements;
  const int m = static_cast<int>(cons.size());

  std::vector<std::vector<Partition>> comm(m);
  for (int i = 0; i < m; ++i) {
    comm[i].reserve(m);
    for (int j = 0; j < m; ++j) comm[i].push_back(c_commutator(a, cons[i], cons[j]));
  }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      ++rep.pairs;
      if (!(comm[i][j] == comm[j][i])) rep.symmetry = false;
      if (!comm[i][j].leq(meet(cons[i], cons[j]))) rep.below_meet = false;
      for (int i2 = 0; i2 < m; ++i2)
        if (cons[i].leq(cons[i2]) && !comm[i][j].leq(comm[i2][j])) rep.monotone = false;
    }

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (!congruences_permute(cons[i], cons[j])) continue;
      Partition joined = congruence_join(a, cons[i], cons[j]);
      int ij = lat.index_of(joined);
      for (int b = 0; b < m; ++b) {
        ++rep.additivity_cases;
        Partition rhs = congruence_join(a, comm[i][b], comm[j][b]);
        if (!(comm[ij][b] == rhs)) rep.additive_when_permuting = false;
      }
    }

  for (const auto& f : into_a) {
    if (!(f.target() == a))
      throw std::invalid_argument("property_suite: homomorphism must land in the algebra");
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        ++rep.preimage_cases;
        Partition lhs = c_commutator(f.source(), preimage_congruence(f, cons[i]),
                                     preimage_congruence(f, cons[j]));
        Partition rhs = preimage_congruence(f, comm[i][j]);
        if (!lhs.leq(rhs)) rep.preimage_leq = false;
      }
  }
  return rep;
}

}  // namespace ua
