#include "ua/bitrel.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ua {

BitRelation::BitRelation(int n) : n_(n), wpr_((n + 63) / 64) {
  if (n <= 0) throw std::invalid_argument("relation carrier must be positive");
  bits_.assign(static_cast<std::size_t>(n_) * wpr_, 0);
}

BitRelation BitRelation::diagonal(int n) {
  BitRelation r(n);
  for (int i = 0; i < n; ++i) r.set(i, i);
  return r;
}

BitRelation BitRelation::full(int n) {
  BitRelation r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.set(i, j);
  return r;
}

BitRelation BitRelation::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                                    bool with_diagonal) {
  BitRelation r = with_diagonal ? diagonal(n) : BitRelation(n);
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw std::invalid_argument("relation pair out of carrier range");
    r.set(i, j);
  }
  return r;
}

BitRelation BitRelation::inverse() const {
  BitRelation t(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

bool BitRelation::reflexive() const {
  for (int i = 0; i < n_; ++i)
    if (!get(i, i)) return false;
  return true;
}

bool BitRelation::symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (get(i, j) != get(j, i)) return false;
  return true;
}

bool BitRelation::transitive() const {
  return compose(*this, *this).subset_of(*this);
}

bool BitRelation::subset_of(const BitRelation& other) const {
  require_same_carrier(*this, other);
  for (std::size_t k = 0; k < bits_.size(); ++k)
    if (bits_[k] & ~other.bits_[k]) return false;
  return true;
}

std::size_t BitRelation::pair_count() const {
  std::size_t c = 0;
  for (uint64_t w : bits_) c += __builtin_popcountll(w);
  return c;
}

std::vector<std::pair<int, int>> BitRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (get(i, j)) out.emplace_back(i, j);
  return out;
}

BitRelation& BitRelation::operator&=(const BitRelation& o) {
  require_same_carrier(*this, o);
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] &= o.bits_[k];
  return *this;
}

BitRelation& BitRelation::operator|=(const BitRelation& o) {
  require_same_carrier(*this, o);
  for (std::size_t k = 0; k < bits_.size(); ++k) bits_[k] |= o.bits_[k];
  return *this;
}

BitRelation compose(const BitRelation& r, const BitRelation& s) {
  require_same_carrier(r, s);
  const int n = r.n_;
  const int wpr = r.wpr_;
  BitRelation out(n);
#pragma omp parallel for schedule(static) if (n >= 128)
  for (int i = 0; i < n; ++i) {
    uint64_t* orow = out.row_ptr(i);
    const uint64_t* rrow = r.row_ptr(i);
    for (int jw = 0; jw < wpr; ++jw) {
      uint64_t w = rrow[jw];
      while (w) {
        int j = jw * 64 + __builtin_ctzll(w);
        w &= w - 1;
        const uint64_t* srow = s.row_ptr(j);
        for (int k = 0; k < wpr; ++k) orow[k] |= srow[k];
      }
    }
  }
  return out;
}

BitRelation relation_power(const BitRelation& r, int n) {
  if (n < 1) throw std::invalid_argument("relation power requires n >= 1");
  BitRelation acc = r;
  for (int i = 1; i < n; ++i) acc = compose(acc, r);
  return acc;
}

BitRelation equivalence_closure(const BitRelation& r) {
  BitRelation acc = r | BitRelation::diagonal(r.carrier_size()) | r.inverse();
  for (;;) {
    BitRelation next = acc | compose(acc, acc);
    if (next == acc) return acc;
    acc = std::move(next);
  }
}

void require_same_carrier(const BitRelation& a, const BitRelation& b) {
  if (a.carrier_size() != b.carrier_size())
    throw std::invalid_argument("relation carrier mismatch");
}

std::string BitRelation::to_string() const {
  std::ostringstream os;
  os << "rel " << n_ << " {";
  for (auto [i, j] : pairs()) os << " (" << i << "," << j << ")";
  os << " }";
  return os.str();
}

namespace {

struct RelTokens {
  const std::string& s;
  std::size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '{' && s[pos] != '}' && s[pos] != '(' && s[pos] != ')' && s[pos] != ',')
      ++pos;
    return s.substr(start, pos - start);
  }
  int number() {
    std::string w = word();
    if (w.empty()) throw std::invalid_argument("relation literal: number expected at offset " +
                                               std::to_string(pos));
    return std::stoi(w);
  }
};

}  // namespace

BitRelation BitRelation::parse(const std::string& text) {
  RelTokens t{text};
  if (t.word() != "rel") throw std::invalid_argument("relation literal must start with 'rel'");
  int n = t.number();
  bool with_diag = false;
  t.skip_ws();
  if (t.pos < text.size() && text[t.pos] == '+') {
    std::string flag = t.word();
    if (flag != "+diag") throw std::invalid_argument("unknown relation flag " + flag);
    with_diag = true;
  }
  if (!t.eat('{')) throw std::invalid_argument("relation literal: '{' expected");
  std::vector<std::pair<int, int>> pairs;
  for (;;) {
    t.skip_ws();
    if (t.eat('}')) break;
    if (!t.eat('(')) throw std::invalid_argument("relation literal: '(' expected");
    int i = t.number();
    if (!t.eat(',')) throw std::invalid_argument("relation literal: ',' expected");
    int j = t.number();
    if (!t.eat(')')) throw std::invalid_argument("relation literal: ')' expected");
    pairs.emplace_back(i, j);
  }
  return from_pairs(n, pairs, with_diag);
}

}  // namespace ua
