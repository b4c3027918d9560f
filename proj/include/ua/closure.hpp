#pragma once

#include <vector>

#include "ua/algebra.hpp"

namespace ua {

/// Closure of a set of k-tuples (lexicographic codes over a's carrier)
/// under the componentwise operations of a, i.e. the subuniverse of A^k
/// generated by gens, without materializing A^k tables.
///
/// This is the hot kernel behind M(alpha,beta) in A^4 and the pushforward
/// base in B^2. Frontier passes are OpenMP-parallel; the result is the
/// sorted code list, deterministic regardless of scheduling.
std::vector<Code> product_closure(const FiniteAlgebra& a, int k, std::vector<Code> gens);

}  // namespace ua
