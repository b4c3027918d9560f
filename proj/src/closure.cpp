#include "ua/closure.hpp"

#include <algorithm>

#include "ua/bits.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ua {

namespace {

// Componentwise application: operands are k-tuple codes, the result is the
// k-tuple code of the pointwise operation values.
inline Code apply_componentwise(const FiniteAlgebra& a, int op, int k,
                                const Code* operands, int r, Elem* scratch) {
  const int n = a.carrier_size();
  // scratch holds r decoded tuples, laid out tuple-major
  for (int j = 0; j < r; ++j)
    decode_tuple(operands[j], k, n, scratch + static_cast<std::size_t>(j) * k);
  Code out = 0;
  for (int i = 0; i < k; ++i) {
    Code argc = 0;
    for (int j = 0; j < r; ++j)
      argc = argc * n + scratch[static_cast<std::size_t>(j) * k + i];
    out = out * n + a.apply_code(op, argc);
  }
  return out;
}

}  // namespace

std::vector<Code> product_closure(const FiniteAlgebra& a, int k, std::vector<Code> gens) {
  const int n = a.carrier_size();
  std::size_t space = 1;
  for (int i = 0; i < k; ++i) {
    space *= static_cast<std::size_t>(n);
    if (space > limits::max_power_carrier())
      throw cap_error("tuple-space closure cap exceeded (n^k too large)");
  }

  Bitset seen(space);
  std::vector<Code> all;
  all.reserve(gens.size());
  for (Code g : gens) {
    if (g >= space) throw std::invalid_argument("generator code out of tuple space");
    if (seen.claim(g)) all.push_back(g);
  }
  for (int op = 0; op < a.signature().op_count(); ++op)
    if (a.signature().op(op).arity == 0) {
      Code c = 0;
      Elem v = a.apply_code(op, 0);
      for (int i = 0; i < k; ++i) c = c * n + v;
      if (seen.claim(c)) all.push_back(c);
    }

  std::size_t frontier_start = 0;
  while (frontier_start < all.size()) {
    std::size_t frontier_end = all.size();
    std::vector<Code> fresh;

    for (int op = 0; op < a.signature().op_count(); ++op) {
      const int r = a.signature().op(op).arity;
      if (r == 0) continue;

      if (r == 1) {
        const std::size_t lo = frontier_start, hi = frontier_end;
#pragma omp parallel if (hi - lo > 2048)
        {
          std::vector<Code> local;
          std::vector<Elem> scratch(static_cast<std::size_t>(r) * k);
          Code operand;
#pragma omp for schedule(static) nowait
          for (std::size_t fi = lo; fi < hi; ++fi) {
            operand = all[fi];
            Code out = apply_componentwise(a, op, k, &operand, 1, scratch.data());
            if (!seen.get(out)) local.push_back(out);
          }
#pragma omp critical
          fresh.insert(fresh.end(), local.begin(), local.end());
        }
      } else if (r == 2) {
        // tuples with at least one frontier operand: (frontier, all) and
        // (old, frontier)
        const std::size_t lo = frontier_start, hi = frontier_end;
#pragma omp parallel if ((hi - lo) * hi > 4096)
        {
          std::vector<Code> local;
          std::vector<Elem> scratch(static_cast<std::size_t>(r) * k);
          Code operands[2];
#pragma omp for schedule(dynamic, 16) nowait
          for (std::size_t fi = lo; fi < hi; ++fi) {
            operands[0] = all[fi];
            for (std::size_t ai = 0; ai < hi; ++ai) {
              operands[1] = all[ai];
              Code out = apply_componentwise(a, op, k, operands, 2, scratch.data());
              if (!seen.get(out)) local.push_back(out);
            }
            operands[1] = all[fi];
            for (std::size_t ai = 0; ai < lo; ++ai) {
              operands[0] = all[ai];
              Code out = apply_componentwise(a, op, k, operands, 2, scratch.data());
              if (!seen.get(out)) local.push_back(out);
            }
          }
#pragma omp critical
          fresh.insert(fresh.end(), local.begin(), local.end());
        }
      } else {
        // general arity: for each position holding a frontier element,
        // odometer the remaining positions over the whole current set
        std::vector<Code> operands(r);
        std::vector<Elem> scratch(static_cast<std::size_t>(r) * k);
        std::vector<std::size_t> idx(r);
        for (int pos = 0; pos < r; ++pos) {
          for (std::size_t fi = frontier_start; fi < frontier_end; ++fi) {
            std::fill(idx.begin(), idx.end(), 0);
            for (;;) {
              bool skip = false;
              for (int j = 0; j < pos; ++j)
                if (idx[j] >= frontier_start) {
                  skip = true;  // counted already with an earlier frontier position
                  break;
                }
              if (!skip) {
                for (int j = 0; j < r; ++j)
                  operands[j] = (j == pos) ? all[fi] : all[idx[j]];
                Code out = apply_componentwise(a, op, k, operands.data(), r, scratch.data());
                if (!seen.get(out)) fresh.push_back(out);
              }
              int j = r - 1;
              for (; j >= 0; --j) {
                if (j == pos) continue;
                if (++idx[j] < frontier_end) break;
                idx[j] = 0;
              }
              if (j < 0) break;
            }
          }
        }
      }
    }

    frontier_start = frontier_end;
    for (Code c : fresh)
      if (seen.claim(c)) all.push_back(c);
  }

  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace ua
