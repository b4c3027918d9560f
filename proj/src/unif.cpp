#include "ua/unif.hpp"

#include <stdexcept>

namespace ua {

namespace {

Partition base_meet(const std::vector<Partition>& base) {
  Partition m = base.front();
  for (std::size_t i = 1; i < base.size(); ++i) m = meet(m, base[i]);
  return m;
}

void require_same_algebra(const CongruenceFilter& f, const CongruenceFilter& g) {
  if (!(f.algebra() == g.algebra()))
    throw std::invalid_argument("congruence filters live on different algebras");
}

}  // namespace

CongruenceFilter::CongruenceFilter(const FiniteAlgebra& a, std::vector<Partition> base)
    : algebra_(&a), base_(std::move(base)), min_(base_.empty() ? Partition(1) : base_meet(base_)) {
  if (base_.empty()) throw std::invalid_argument("congruence filter base must be nonempty");
  for (const auto& p : base_)
    if (!is_congruence(a, p))
      throw std::invalid_argument("congruence filter base element is not a congruence");
}

CongruenceFilter congruence_filter_meet(const CongruenceFilter& f, const CongruenceFilter& g) {
  require_same_algebra(f, g);
  std::vector<Partition> base;
  for (const auto& p : f.base())
    for (const auto& q : g.base()) base.push_back(meet(p, q));
  return CongruenceFilter(f.algebra(), std::move(base));
}

CongruenceFilter congruence_filter_join(const CongruenceFilter& f, const CongruenceFilter& g) {
  require_same_algebra(f, g);
  std::vector<Partition> base;
  for (const auto& p : f.base())
    for (const auto& q : g.base()) base.push_back(congruence_join(f.algebra(), p, q));
  return CongruenceFilter(f.algebra(), std::move(base));
}

CongruenceFilter filter_commutator(const CongruenceFilter& f, const CongruenceFilter& g) {
  require_same_algebra(f, g);
  std::vector<Partition> base;
  base.reserve(f.base().size() * g.base().size());
  for (const auto& p : f.base())
    for (const auto& q : g.base()) base.push_back(c_commutator(f.algebra(), p, q));
  return CongruenceFilter(f.algebra(), std::move(base));
}

CUCommUReport cucommu_inequality_check(const CongruenceFilter& f, const CongruenceFilter& g) {
  require_same_algebra(f, g);
  Partition left = c_commutator(f.algebra(), f.minimum(), g.minimum());
  CongruenceFilter pairwise = filter_commutator(f, g);
  Partition right = pairwise.minimum();
  CUCommUReport rep{left.leq(right), !(left == right), std::move(left), std::move(right)};
  return rep;
}

}  // namespace ua
