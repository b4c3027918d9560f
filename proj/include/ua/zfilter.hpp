#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace ua {

/// Exponent bound for one prime in a ZIdealFilter: a natural number or
/// infinity (infinity absorbs addition, as in (p^inf)).
class Cap {
 public:
  Cap() : v_(0) {}
  explicit Cap(long long k) : v_(k) {
    if (k < 0) throw std::invalid_argument("cap must be >= 0");
  }
  static Cap inf() {
    Cap c;
    c.v_ = -1;
    return c;
  }
  bool is_inf() const { return v_ < 0; }
  long long finite_value() const { return v_; }

  friend Cap operator+(Cap a, Cap b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return Cap(a.v_ + b.v_);
  }
  friend Cap cap_min(Cap a, Cap b) {
    if (a.is_inf()) return b;
    if (b.is_inf()) return a;
    return Cap(std::min(a.v_, b.v_));
  }
  friend Cap cap_max(Cap a, Cap b) {
    if (a.is_inf() || b.is_inf()) return inf();
    return Cap(std::max(a.v_, b.v_));
  }
  /// true when a allows at most what b allows (a <= b pointwise).
  friend bool cap_leq(Cap a, Cap b) {
    if (b.is_inf()) return true;
    if (a.is_inf()) return false;
    return a.v_ <= b.v_;
  }
  bool operator==(const Cap&) const = default;

 private:
  long long v_;
};

/// Congruential uniformity on the ring of integers, represented exactly:
/// a finite-support map prime -> cap. The ideal (d) belongs to the filter
/// iff v_p(d) <= cap(p) for every prime (missing prime = cap 0). Principal
/// filters Fg{(n)} are the exact factorizations; (m^inf) caps every prime
/// divisor of m at infinity. Canonical form stores no zero caps.
class ZIdealFilter {
 public:
  ZIdealFilter() = default;  // the trivial filter Fg{(1)}

  static ZIdealFilter principal(unsigned long long n);     // caps = v_p(n)
  static ZIdealFilter power_filter(unsigned long long m);  // (m^inf)

  const std::map<long long, Cap>& caps() const { return caps_; }
  Cap cap(long long p) const;
  void set_cap(long long p, Cap c);  // erases zero caps (canonical form)

  bool contains_ideal(unsigned long long d) const;

  friend ZIdealFilter z_meet(const ZIdealFilter& a, const ZIdealFilter& b);  // pointwise max
  friend ZIdealFilter z_join(const ZIdealFilter& a, const ZIdealFilter& b);  // pointwise min
  friend ZIdealFilter z_commutator(const ZIdealFilter& a, const ZIdealFilter& b);  // sum

  /// Filter order: a <= b iff a's caps dominate b's pointwise.
  friend bool z_leq(const ZIdealFilter& a, const ZIdealFilter& b);

  bool operator==(const ZIdealFilter&) const = default;

  std::string to_string() const;  // canonical "caps{2:3,5:inf}"
  std::string pretty() const;     // "(8)&5^inf" style; "(1)" when trivial

 private:
  std::map<long long, Cap> caps_;
};

/// Grammar: atoms "( n )" (principal) and "m^inf"; atoms joined by '&'
/// combine by z_meet. m, n must be nonzero natural numbers.
ZIdealFilter z_parse(const std::string& text);

}  // namespace ua
