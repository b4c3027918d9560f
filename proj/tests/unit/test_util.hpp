#pragma once

// Shared helpers for the unit suites: independent oracles (partition
// enumeration, depth-bounded term closure) and deterministic random data.

#include <random>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/bitrel.hpp"
#include "ua/congruence.hpp"
#include "ua/partition.hpp"

namespace ua::testutil {

/// All partitions of {0..n-1} via restricted growth strings. Oracle for cg
/// and con_all on tiny carriers.
inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> rgs(n, 0);
  for (;;) {
    UnionFind uf(n);
    std::vector<int> first(n, -1);
    for (int i = 0; i < n; ++i) {
      if (first[rgs[i]] < 0)
        first[rgs[i]] = i;
      else
        uf.unite(first[rgs[i]], i);
    }
    out.push_back(Partition::from_union_find(uf));
    // next restricted growth string
    int i = n - 1;
    for (; i > 0; --i) {
      int maxv = 0;
      for (int j = 0; j < i; ++j) maxv = std::max(maxv, rgs[j]);
      if (rgs[i] <= maxv) {
        ++rgs[i];
        for (int j = i + 1; j < n; ++j) rgs[j] = 0;
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

/// Least congruence containing the pairs, by brute force over all
/// partitions. Exponential; keep n <= 6.
inline Partition cg_bruteforce(const FiniteAlgebra& a,
                               const std::vector<std::pair<Elem, Elem>>& pairs) {
  Partition best = Partition::top(a.carrier_size());
  for (const Partition& p : all_partitions(a.carrier_size())) {
    bool covers = true;
    for (auto [x, y] : pairs)
      if (!p.same(x, y)) {
        covers = false;
        break;
      }
    if (covers && is_congruence(a, p) && p.leq(best)) best = p;
  }
  return best;
}

inline BitRelation random_relation(int n, std::mt19937& rng, double density = 0.3) {
  BitRelation r(n);
  std::bernoulli_distribution coin(density);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(rng)) r.set(i, j);
  return r;
}

inline BitRelation random_reflexive_relation(int n, std::mt19937& rng, double density = 0.3) {
  BitRelation r = random_relation(n, rng, density);
  return r | BitRelation::diagonal(n);
}

/// Depth-bounded term-image closure: S_{d+1} = S_d plus one application of
/// every basic operation to S_d tuples. Independent cross-check for the
/// worklist subalgebra closure.
inline std::vector<Code> depth_bounded_closure(const FiniteAlgebra& a, int k,
                                               std::vector<Code> gens, int depth) {
  const int n = a.carrier_size();
  std::vector<Code> cur = std::move(gens);
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  for (int d = 0; d < depth; ++d) {
    std::vector<Code> next = cur;
    for (int op = 0; op < a.signature().op_count(); ++op) {
      const int r = a.signature().op(op).arity;
      if (r == 0) {
        Code c = 0;
        for (int i = 0; i < k; ++i) c = c * n + a.apply_code(op, 0);
        next.push_back(c);
        continue;
      }
      std::vector<std::size_t> idx(r, 0);
      std::vector<Elem> comps(static_cast<std::size_t>(r) * k);
      for (;;) {
        for (int j = 0; j < r; ++j)
          decode_tuple(cur[idx[j]], k, n, comps.data() + static_cast<std::size_t>(j) * k);
        Code out = 0;
        for (int i = 0; i < k; ++i) {
          Code argc = 0;
          for (int j = 0; j < r; ++j)
            argc = argc * n + comps[static_cast<std::size_t>(j) * k + i];
          out = out * n + a.apply_code(op, argc);
        }
        next.push_back(out);
        int j = r - 1;
        while (j >= 0 && ++idx[j] == cur.size()) idx[j--] = 0;
        if (j < 0) break;
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return cur;
}

}  // namespace ua::testutil
