#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ua/bitrel.hpp"

namespace ua {

/// Mutable union-find over {0..n-1}; the transient workhorse behind
/// congruence generation. Normalize into a Partition when done.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  /// Returns true if the classes were distinct (a merge happened).
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);  // keep least element as root
    parent_[b] = a;
    return true;
  }

  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

/// Equivalence relation/partition of {0..n-1} in canonical normal form:
/// parent[i] is the least element of the block of i. Two partitions are
/// equal iff their parent arrays are equal.
class Partition {
 public:
  explicit Partition(int n);  // discrete partition (all singletons)

  static Partition top(int n);  // one block
  static Partition from_union_find(UnionFind& uf);
  static Partition from_relation(const BitRelation& r);  // must be an equivalence
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int carrier_size() const { return static_cast<int>(parent_.size()); }
  int find(int i) const { return parent_[i]; }
  bool same(int i, int j) const { return parent_[i] == parent_[j]; }
  int block_count() const;
  std::vector<std::vector<int>> blocks() const;

  bool is_discrete() const;
  bool is_top() const { return block_count() == 1; }

  /// Refinement order: *this <= coarser iff every block of *this lies
  /// inside a block of coarser.
  bool leq(const Partition& coarser) const;

  friend Partition meet(const Partition& p, const Partition& q);
  friend Partition join(const Partition& p, const Partition& q);  // equivalence join

  BitRelation to_relation() const;
  std::vector<std::pair<int, int>> nondiagonal_pairs() const;

  bool operator==(const Partition&) const = default;

  // Canonical literal "0 2|1 3": blocks sorted by least element, elements
  // ascending. Parsing demands every carrier element appear exactly once.
  std::string to_string() const;
  static Partition parse(const std::string& text, int n);

  const std::vector<int>& parents() const { return parent_; }

 private:
  std::vector<int> parent_;
};

}  // namespace ua
