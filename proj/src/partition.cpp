#include "ua/partition.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ua {

Partition::Partition(int n) : parent_(n) {
  if (n <= 0) throw std::invalid_argument("partition carrier must be positive");
  for (int i = 0; i < n; ++i) parent_[i] = i;
}

Partition Partition::top(int n) {
  Partition p(n);
  std::fill(p.parent_.begin(), p.parent_.end(), 0);
  return p;
}

Partition Partition::from_union_find(UnionFind& uf) {
  Partition p(uf.size());
  for (int i = 0; i < uf.size(); ++i) p.parent_[i] = uf.find(i);
  return p;
}

Partition Partition::from_relation(const BitRelation& r) {
  if (!r.is_equivalence())
    throw std::invalid_argument("relation is not an equivalence");
  UnionFind uf(r.carrier_size());
  for (int i = 0; i < r.carrier_size(); ++i)
    for (int j = i + 1; j < r.carrier_size(); ++j)
      if (r.get(i, j)) uf.unite(i, j);
  return from_union_find(uf);
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  Partition p(n);
  std::vector<bool> seen(n, false);
  for (const auto& b : blocks) {
    if (b.empty()) throw std::invalid_argument("empty block");
    int least = *std::min_element(b.begin(), b.end());
    for (int x : b) {
      if (x < 0 || x >= n) throw std::invalid_argument("block element out of range");
      if (seen[x]) throw std::invalid_argument("element repeated across blocks");
      seen[x] = true;
      p.parent_[x] = least;
    }
  }
  for (int i = 0; i < n; ++i)
    if (!seen[i]) throw std::invalid_argument("element missing from partition literal");
  return p;
}

int Partition::block_count() const {
  int c = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (parent_[i] == static_cast<int>(i)) ++c;
  return c;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::map<int, std::vector<int>> by_root;
  for (std::size_t i = 0; i < parent_.size(); ++i)
    by_root[parent_[i]].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

bool Partition::is_discrete() const {
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (parent_[i] != static_cast<int>(i)) return false;
  return true;
}

bool Partition::leq(const Partition& coarser) const {
  if (carrier_size() != coarser.carrier_size())
    throw std::invalid_argument("partition carrier mismatch");
  for (std::size_t i = 0; i < parent_.size(); ++i)
    if (coarser.parent_[i] != coarser.parent_[parent_[i]]) return false;
  return true;
}

Partition meet(const Partition& p, const Partition& q) {
  if (p.carrier_size() != q.carrier_size())
    throw std::invalid_argument("partition carrier mismatch");
  int n = p.carrier_size();
  Partition out(n);
  std::map<std::pair<int, int>, int> first_seen;
  for (int i = 0; i < n; ++i) {
    auto key = std::make_pair(p.parent_[i], q.parent_[i]);
    auto [it, fresh] = first_seen.emplace(key, i);
    out.parent_[i] = it->second;
  }
  return out;
}

Partition join(const Partition& p, const Partition& q) {
  if (p.carrier_size() != q.carrier_size())
    throw std::invalid_argument("partition carrier mismatch");
  UnionFind uf(p.carrier_size());
  for (int i = 0; i < p.carrier_size(); ++i) {
    uf.unite(i, p.parent_[i]);
    uf.unite(i, q.parent_[i]);
  }
  return Partition::from_union_find(uf);
}

BitRelation Partition::to_relation() const {
  BitRelation r(carrier_size());
  for (int i = 0; i < carrier_size(); ++i)
    for (int j = 0; j < carrier_size(); ++j)
      if (same(i, j)) r.set(i, j);
  return r;
}

std::vector<std::pair<int, int>> Partition::nondiagonal_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < carrier_size(); ++i)
    for (int j = 0; j < carrier_size(); ++j)
      if (i != j && same(i, j)) out.emplace_back(i, j);
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  bool first_block = true;
  for (const auto& b : blocks()) {
    if (!first_block) os << '|';
    first_block = false;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (k) os << ' ';
      os << b[k];
    }
  }
  return os.str();
}

Partition Partition::parse(const std::string& text, int n) {
  std::vector<std::vector<int>> blocks;
  std::stringstream blocks_in(text);
  std::string block_text;
  while (std::getline(blocks_in, block_text, '|')) {
    std::istringstream in(block_text);
    std::vector<int> block;
    int x;
    while (in >> x) block.push_back(x);
    if (!in.eof())
      throw std::invalid_argument("partition literal: bad token in block '" + block_text + "'");
    if (!block.empty()) blocks.push_back(std::move(block));
  }
  if (blocks.empty()) throw std::invalid_argument("partition literal is empty");
  return from_blocks(n, blocks);
}

}  // namespace ua
