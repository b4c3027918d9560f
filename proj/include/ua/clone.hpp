#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ua/algebra.hpp"

namespace ua {

/// A k-ary term operation of an algebra: its full value table (indexed by
/// lexicographic argument codes) plus a witness term that evaluates to it.
struct CloneElement {
  int arity = 0;
  std::vector<Elem> table;
  TermTree witness = TermTree::var(0);
};

struct CloneResult {
  std::vector<CloneElement> elements;
  bool complete = false;  // false iff the budget stopped the closure
};

inline constexpr std::size_t kDefaultCloneBudget = 1'000'000;

/// Breadth-first closure of the k projections under all basic operations
/// applied pointwise; each element carries a minimal-depth witness (first
/// qualifying table wins, in deterministic enumeration order). Stops early,
/// with complete=false, if the budget is exceeded.
CloneResult clone_generate(const FiniteAlgebra& a, int k,
                           std::size_t budget = kDefaultCloneBudget);

/// Streaming variant: visit(e) is called on every element as discovered;
/// returning false stops the closure early (complete stays false).
CloneResult clone_generate_until(const FiniteAlgebra& a, int k, std::size_t budget,
                                 const std::function<bool(const CloneElement&)>& visit);

enum class WitnessKind { maltsev, day, jonsson };

struct TermWitness {
  WitnessKind kind;
  std::vector<CloneElement> chain;
};

enum class SearchStatus { found, none, budget_exhausted };

template <typename T>
struct SearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<T> value;
};

bool is_maltsev_table(int n, const std::vector<Elem>& table);

/// Scans the ternary clone for p(x,x,y)=y and p(x,y,y)=x. Early exit on the
/// first hit; "none" only when the whole clone fit within budget.
SearchResult<TermWitness> find_maltsev(const FiniteAlgebra& a,
                                       std::size_t budget = kDefaultCloneBudget);

/// Day chain (x, p(x,p(x,y,z),w), w) from a verified Mal'tsev operation;
/// identities (D1)-(D5) re-verified exhaustively on the algebra.
TermWitness day_from_maltsev(const FiniteAlgebra& a, const CloneElement& p);

/// Graph search over the quaternary (resp. ternary) clone: nodes are tables
/// satisfying the per-term identity (D1) (resp. (J3)); edges are the
/// alternating linking identities (D4)/(D5) (resp. (J4)/(J5)); a chain is a
/// path from the first projection to the last, of at most max_len edges.
SearchResult<TermWitness> find_day(const FiniteAlgebra& a, int max_len,
                                   std::size_t budget = kDefaultCloneBudget);
SearchResult<TermWitness> find_jonsson(const FiniteAlgebra& a, int max_len,
                                       std::size_t budget = kDefaultCloneBudget);

/// Empty string when the chain satisfies all identities of its kind on every
/// tuple; otherwise a description of the first failure.
std::string verify_witness(const FiniteAlgebra& a, const TermWitness& w);

/// Recomputes each chain table from its witness term; true when they agree
/// everywhere.
bool witness_tables_consistent(const FiniteAlgebra& a, const TermWitness& w);

/// Builds a witness from user-supplied term literals (one term per chain
/// position, prefix syntax over the algebra's basic operations, variables
/// x0..x3 for Day, x0..x2 for Jonsson/Mal'tsev); verifies before returning.
TermWitness witness_from_terms(const FiniteAlgebra& a, WitnessKind kind,
                               const std::vector<std::string>& term_texts);

CloneElement clone_element_from_term(const FiniteAlgebra& a, int arity, const TermTree& t);

}  // namespace ua
