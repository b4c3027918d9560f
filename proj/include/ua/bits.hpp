#pragma once

#include <cstdint>
#include <vector>

namespace ua {

/// Fixed-size dense bitset. Used for element sets of carriers and for the
/// membership tables of tuple-space closures.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

  /// Sets bit i; returns true if it was previously clear.
  bool claim(std::size_t i) {
    uint64_t mask = uint64_t{1} << (i & 63);
    uint64_t& w = words_[i >> 6];
    if (w & mask) return false;
    w |= mask;
    return true;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool subset_of(const Bitset& other) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool operator==(const Bitset&) const = default;

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (get(i)) out.push_back(i);
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace ua
