#pragma once

// Serial reference implementations of the parallel kernels. Deliberately
// naive (element loops, std::set worklists) and independent of the
// production code paths in closure.cpp/commutator.cpp; the unit tests
// compare the two and the bench target times them side by side.

#include <array>
#include <set>
#include <vector>

#include "ua/algebra.hpp"
#include "ua/bitrel.hpp"
#include "ua/partition.hpp"

namespace ua::reference {

/// Triple-loop boolean matrix product.
inline BitRelation compose(const BitRelation& r, const BitRelation& s) {
  require_same_carrier(r, s);
  const int n = r.carrier_size();
  BitRelation out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        if (r.get(i, j) && s.get(j, k)) {
          out.set(i, k);
          break;
        }
  return out;
}

/// Rescan-everything closure of tuple codes under componentwise operations.
inline std::vector<Code> product_closure(const FiniteAlgebra& a, int k,
                                         const std::vector<Code>& gens) {
  const int n = a.carrier_size();
  std::set<Code> all(gens.begin(), gens.end());
  for (int op = 0; op < a.signature().op_count(); ++op)
    if (a.signature().op(op).arity == 0) {
      Code c = 0;
      for (int i = 0; i < k; ++i) c = c * n + a.apply_code(op, 0);
      all.insert(c);
    }
  std::vector<Elem> comps;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Code> snapshot(all.begin(), all.end());
    for (int op = 0; op < a.signature().op_count(); ++op) {
      const int r = a.signature().op(op).arity;
      if (r == 0) continue;
      std::vector<std::size_t> idx(r, 0);
      for (;;) {
        comps.assign(static_cast<std::size_t>(r) * k, 0);
        for (int j = 0; j < r; ++j)
          decode_tuple(snapshot[idx[j]], k, n, comps.data() + static_cast<std::size_t>(j) * k);
        Code out = 0;
        for (int i = 0; i < k; ++i) {
          Code argc = 0;
          for (int j = 0; j < r; ++j) argc = argc * n + comps[static_cast<std::size_t>(j) * k + i];
          out = out * n + a.apply_code(op, argc);
        }
        if (all.insert(out).second) grew = true;
        int j = r - 1;
        while (j >= 0 && ++idx[j] == snapshot.size()) idx[j--] = 0;
        if (j < 0) break;
      }
    }
  }
  return std::vector<Code>(all.begin(), all.end());
}

/// Plain scan for the least term-condition violation.
inline std::vector<std::array<Elem, 4>> violating_matrices(const std::vector<Code>& codes,
                                                           int n, const Partition& delta,
                                                           bool weak) {
  std::vector<std::array<Elem, 4>> out;
  const Code cn = static_cast<Code>(n);
  for (Code c : codes) {
    Elem u11 = static_cast<Elem>(c / (cn * cn * cn));
    Elem u12 = static_cast<Elem>((c / (cn * cn)) % cn);
    Elem u21 = static_cast<Elem>((c / cn) % cn);
    Elem u22 = static_cast<Elem>(c % cn);
    bool hyp = weak ? (u11 == u12) : delta.same(u11, u12);
    if (hyp && !delta.same(u21, u22)) out.push_back({u11, u12, u21, u22});
  }
  return out;
}

}  // namespace ua::reference
