#include "ua/relfilter.hpp"

#include <stdexcept>

namespace ua {

namespace {

BitRelation base_meet(const std::vector<BitRelation>& base) {
  BitRelation m = base.front();
  for (std::size_t i = 1; i < base.size(); ++i) m &= base[i];
  return m;
}

}  // namespace

RelationFilter::RelationFilter(std::vector<BitRelation> base)
    : base_(std::move(base)), minimum_(base_.empty() ? BitRelation(1) : base_meet(base_)) {
  if (base_.empty()) throw std::invalid_argument("filter base must be nonempty");
  for (const auto& r : base_) require_same_carrier(r, base_.front());
}

RelationFilter RelationFilter::principal(BitRelation r) {
  return RelationFilter(std::vector<BitRelation>{std::move(r)});
}

bool RelationFilter::contains(const BitRelation& u) const {
  require_same_carrier(u, minimum_);
  return minimum_.subset_of(u);
}

bool RelationFilter::leq(const RelationFilter& g) const {
  return minimum_.subset_of(g.minimum_);
}

bool RelationFilter::cofinally_equal(const RelationFilter& g) const {
  return minimum_ == g.minimum_;
}

AxiomReport RelationFilter::check_axioms() const {
  AxiomReport rep;
  rep.u1 = rep.u2 = true;  // upward closure and finite meets hold by base semantics
  rep.u3 = true;
  for (const auto& u : base_)
    if (!u.reflexive()) {
      rep.u3 = false;
      break;
    }
  rep.u4 = true;
  for (const auto& u : base_)
    if (!contains(u.inverse())) {
      rep.u4 = false;
      break;
    }
  rep.u5 = true;
  BitRelation min_sq = compose(minimum_, minimum_);
  for (const auto& u : base_)
    if (!min_sq.subset_of(u)) {
      rep.u5 = false;
      break;
    }
  return rep;
}

RelationFilter filter_meet(const RelationFilter& f, const RelationFilter& g) {
  require_same_carrier(f.minimum(), g.minimum());
  std::vector<BitRelation> base;
  base.reserve(f.base().size() * g.base().size());
  for (const auto& u : f.base())
    for (const auto& v : g.base()) base.push_back(u & v);
  return RelationFilter(std::move(base));
}

RelationFilter filter_join(const RelationFilter& f, const RelationFilter& g) {
  require_same_carrier(f.minimum(), g.minimum());
  std::vector<BitRelation> base;
  base.reserve(f.base().size() * g.base().size());
  for (const auto& u : f.base())
    for (const auto& v : g.base()) base.push_back(u | v);
  return RelationFilter(std::move(base));
}

RelationFilter circ_filter(const RelationFilter& f, const RelationFilter& g) {
  require_same_carrier(f.minimum(), g.minimum());
  std::vector<BitRelation> base;
  base.reserve(f.base().size() * g.base().size());
  for (const auto& u : f.base())
    for (const auto& v : g.base()) base.push_back(compose(u, v));
  return RelationFilter(std::move(base));
}

RelationFilter uniformity_join(const RelationFilter& f, const RelationFilter& g) {
  require_same_carrier(f.minimum(), g.minimum());
  return RelationFilter::principal(equivalence_closure(f.minimum() | g.minimum()));
}

bool semipermute_join_check(const RelationFilter& f, const RelationFilter& g) {
  if (!f.check_axioms().uniformity() || !g.check_axioms().uniformity())
    throw std::invalid_argument("semipermute_join_check requires uniformities");
  bool join_is_circ = uniformity_join(f, g).cofinally_equal(circ_filter(f, g));
  bool gf_below_fg = circ_filter(g, f).leq(circ_filter(f, g));
  return join_is_circ == gf_below_fg;
}

std::optional<BitRelation> nth_root(const BitRelation& u, int n, const RelationFilter& f) {
  if (n < 1) throw std::invalid_argument("nth_root requires n >= 1");
  if (!f.contains(u)) throw std::invalid_argument("nth_root: relation not in filter");
  const BitRelation& v = f.minimum();
  if (relation_power(v, n).subset_of(u)) return v;
  return std::nullopt;
}

}  // namespace ua
