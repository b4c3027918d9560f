#include "ua/zfilter.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ua {

namespace {

std::map<long long, long long> factorize(unsigned long long n) {
  std::map<long long, long long> out;
  for (unsigned long long p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      ++out[static_cast<long long>(p)];
      n /= p;
    }
  if (n > 1) ++out[static_cast<long long>(n)];
  return out;
}

}  // namespace

ZIdealFilter ZIdealFilter::principal(unsigned long long n) {
  if (n == 0) throw std::invalid_argument("principal ideal filter needs a nonzero natural number");
  ZIdealFilter f;
  for (auto [p, e] : factorize(n)) f.caps_.emplace(p, Cap(e));
  return f;
}

ZIdealFilter ZIdealFilter::power_filter(unsigned long long m) {
  if (m == 0) throw std::invalid_argument("(m^inf) needs a nonzero natural number");
  ZIdealFilter f;
  for (auto [p, e] : factorize(m)) f.caps_.emplace(p, Cap::inf());
  return f;
}

Cap ZIdealFilter::cap(long long p) const {
  auto it = caps_.find(p);
  return it == caps_.end() ? Cap(0) : it->second;
}

void ZIdealFilter::set_cap(long long p, Cap c) {
  if (c == Cap(0))
    caps_.erase(p);
  else
    caps_[p] = c;
}

bool ZIdealFilter::contains_ideal(unsigned long long d) const {
  if (d == 0) return false;
  for (auto [p, e] : factorize(d))
    if (!cap_leq(Cap(e), cap(p))) return false;
  return true;
}

ZIdealFilter z_meet(const ZIdealFilter& a, const ZIdealFilter& b) {
  ZIdealFilter out = a;
  for (auto [p, c] : b.caps_) out.set_cap(p, cap_max(out.cap(p), c));
  return out;
}

ZIdealFilter z_join(const ZIdealFilter& a, const ZIdealFilter& b) {
  ZIdealFilter out;
  for (auto [p, c] : a.caps_) out.set_cap(p, cap_min(c, b.cap(p)));
  return out;
}

ZIdealFilter z_commutator(const ZIdealFilter& a, const ZIdealFilter& b) {
  ZIdealFilter out = a;
  for (auto [p, c] : b.caps_) out.set_cap(p, out.cap(p) + c);
  return out;
}

bool z_leq(const ZIdealFilter& a, const ZIdealFilter& b) {
  for (auto [p, c] : b.caps_)
    if (!cap_leq(c, a.cap(p))) return false;
  return true;
}

std::string ZIdealFilter::to_string() const {
  std::ostringstream os;
  os << "caps{";
  bool first = true;
  for (auto [p, c] : caps_) {
    if (!first) os << ',';
    first = false;
    os << p << ':';
    if (c.is_inf())
      os << "inf";
    else
      os << c.finite_value();
  }
  os << "}";
  return os.str();
}

std::string ZIdealFilter::pretty() const {
  unsigned long long finite_part = 1;
  unsigned long long inf_part = 1;
  for (auto [p, c] : caps_) {
    if (c.is_inf()) {
      inf_part *= static_cast<unsigned long long>(p);
    } else {
      for (long long i = 0; i < c.finite_value(); ++i)
        finite_part *= static_cast<unsigned long long>(p);
    }
  }
  std::ostringstream os;
  if (finite_part > 1) os << "(" << finite_part << ")";
  if (inf_part > 1) {
    if (finite_part > 1) os << "&";
    os << inf_part << "^inf";
  }
  if (finite_part == 1 && inf_part == 1) os << "(1)";
  return os.str();
}

ZIdealFilter z_parse(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto number = [&]() -> unsigned long long {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start)
      throw std::invalid_argument("zfilter: number expected at offset " + std::to_string(pos));
    return std::stoull(text.substr(start, pos - start));
  };
  auto atom = [&]() -> ZIdealFilter {
    skip();
    if (pos >= text.size()) throw std::invalid_argument("zfilter: atom expected");
    if (text[pos] == '(') {
      ++pos;
      unsigned long long n = number();
      skip();
      if (pos >= text.size() || text[pos] != ')')
        throw std::invalid_argument("zfilter: ')' expected at offset " + std::to_string(pos));
      ++pos;
      if (n == 0) throw std::invalid_argument("zfilter: nonzero natural number required");
      return ZIdealFilter::principal(n);
    }
    unsigned long long m = number();
    skip();
    if (pos + 1 < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      if (text.compare(pos, 3, "inf") != 0)
        throw std::invalid_argument("zfilter: expected 'inf' after '^'");
      pos += 3;
      if (m == 0) throw std::invalid_argument("zfilter: nonzero natural number required");
      return ZIdealFilter::power_filter(m);
    }
    throw std::invalid_argument("zfilter: bare number must be '(n)' or 'm^inf'");
  };

  ZIdealFilter acc = atom();
  for (;;) {
    skip();
    if (pos >= text.size()) break;
    if (text[pos] != '&')
      throw std::invalid_argument("zfilter: '&' expected at offset " + std::to_string(pos));
    ++pos;
    acc = z_meet(acc, atom());
  }
  return acc;
}

}  // namespace ua
