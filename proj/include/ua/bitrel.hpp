#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ua {

/// Binary relation on the carrier {0..n-1}, stored as a dense n x n bit
/// matrix. Entry (i,j) set means i R j. Rows are contiguous 64-bit words,
/// which makes composition a word-parallel OR of rows.
class BitRelation {
 public:
  explicit BitRelation(int n);

  static BitRelation diagonal(int n);
  static BitRelation full(int n);
  static BitRelation from_pairs(int n, const std::vector<std::pair<int, int>>& pairs,
                                bool with_diagonal = false);

  int carrier_size() const { return n_; }

  bool get(int i, int j) const {
    return (row_ptr(i)[static_cast<std::size_t>(j) >> 6] >> (j & 63)) & 1u;
  }
  void set(int i, int j) {
    row_ptr(i)[static_cast<std::size_t>(j) >> 6] |= uint64_t{1} << (j & 63);
  }

  BitRelation inverse() const;
  bool reflexive() const;
  bool symmetric() const;
  bool transitive() const;
  bool is_equivalence() const { return reflexive() && symmetric() && transitive(); }

  bool subset_of(const BitRelation& other) const;
  std::size_t pair_count() const;
  std::vector<std::pair<int, int>> pairs() const;

  BitRelation& operator&=(const BitRelation& o);
  BitRelation& operator|=(const BitRelation& o);
  friend BitRelation operator&(BitRelation a, const BitRelation& b) { return a &= b; }
  friend BitRelation operator|(BitRelation a, const BitRelation& b) { return a |= b; }

  bool operator==(const BitRelation&) const = default;

  /// Relational product: (i,k) set iff some j has i R j and j S k.
  /// OpenMP-parallel over rows for large carriers.
  friend BitRelation compose(const BitRelation& r, const BitRelation& s);

  /// n-fold relational product R^n, n >= 1.
  friend BitRelation relation_power(const BitRelation& r, int n);

  /// Least equivalence containing r (reflexive-symmetric-transitive closure).
  friend BitRelation equivalence_closure(const BitRelation& r);

  // Text form: "rel <n> { (i,j) (k,l) ... }" with pairs sorted; optional
  // "+diag" on input makes the diagonal implicit.
  std::string to_string() const;
  static BitRelation parse(const std::string& text);

  int words_per_row() const { return wpr_; }
  const uint64_t* row_ptr(int i) const { return bits_.data() + static_cast<std::size_t>(i) * wpr_; }
  uint64_t* row_ptr(int i) { return bits_.data() + static_cast<std::size_t>(i) * wpr_; }

 private:
  int n_ = 0;
  int wpr_ = 0;
  std::vector<uint64_t> bits_;
};

void require_same_carrier(const BitRelation& a, const BitRelation& b);

}  // namespace ua
