#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ua/bits.hpp"

namespace ua {

using Elem = int;
using Code = uint64_t;  // lexicographic index of a tuple over the carrier

/// Raised when a configured size cap would be exceeded. A hard error, never
/// a silent truncation.
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace limits {
// Default caps; settable for experiments, e.g. in the bench harness.
std::size_t max_carrier();            // base algebras (default 64)
std::size_t max_power_carrier();      // carriers of powers/tuple spaces (default 1e7)
std::size_t max_table_entries();      // materialized table entries (default 1e7)
void set_max_carrier(std::size_t);
void set_max_power_carrier(std::size_t);
void set_max_table_entries(std::size_t);
}  // namespace limits

struct OpSym {
  std::string name;
  int arity = 0;
  bool operator==(const OpSym&) const = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<OpSym> ops);

  int op_count() const { return static_cast<int>(ops_.size()); }
  const OpSym& op(int i) const { return ops_[i]; }
  const std::vector<OpSym>& ops() const { return ops_; }
  int index_of(const std::string& name) const;  // -1 if absent
  bool has_constants() const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<OpSym> ops_;
};

inline Code encode_tuple(std::span<const Elem> t, int n) {
  Code c = 0;
  for (Elem x : t) c = c * static_cast<Code>(n) + static_cast<Code>(x);
  return c;
}

inline void decode_tuple(Code c, int k, int n, Elem* out) {
  for (int i = k - 1; i >= 0; --i) {
    out[i] = static_cast<Elem>(c % n);
    c /= n;
  }
}

/// Finite algebra: a signature plus one total operation table per symbol.
/// The table for a k-ary operation has n^k entries in row-major
/// lexicographic argument order (first argument most significant).
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::string name, Signature sig, int carrier_size,
                std::vector<std::vector<Elem>> tables);

  const std::string& name() const { return name_; }
  const Signature& signature() const { return sig_; }
  int carrier_size() const { return n_; }

  Elem apply(int op, std::span<const Elem> args) const {
    return tables_[op][encode_tuple(args, n_)];
  }
  Elem apply_code(int op, Code args_code) const { return tables_[op][args_code]; }
  const std::vector<Elem>& table(int op) const { return tables_[op]; }

  bool operator==(const FiniteAlgebra&) const = default;

 private:
  std::string name_;
  Signature sig_;
  int n_;
  std::vector<std::vector<Elem>> tables_;
};

/// Term over a signature: a variable index or an operation applied to
/// subterms. Immutable; shared subtrees are fine.
class TermTree {
 public:
  static TermTree var(int index);
  static TermTree apply(std::string op_name, std::vector<TermTree> children);

  bool is_var() const { return std::holds_alternative<int>(node_); }
  int var_index() const { return std::get<int>(node_); }
  const std::string& op_name() const { return std::get<Apply>(node_).op; }
  const std::vector<TermTree>& children() const { return std::get<Apply>(node_).children; }

  int max_var() const;  // -1 when the term has no variables

  std::string to_string() const;  // prefix form "(op t1 t2 ...)", variables "x<i>"
  static TermTree parse(const std::string& text);

  /// Substitutes args[i] for variable i. Variables beyond args.size() are
  /// not allowed.
  TermTree substitute(std::span<const TermTree> args) const;

 private:
  struct Apply {
    std::string op;
    std::vector<TermTree> children;
  };
  std::variant<int, Apply> node_;
  explicit TermTree(std::variant<int, Apply> node) : node_(std::move(node)) {}
};

/// Bottom-up evaluation of t at env; env must cover every variable of t,
/// and every operation must exist in a's signature with matching arity.
Elem eval_term(const FiniteAlgebra& a, const TermTree& t, std::span<const Elem> env);

/// Direct power A^k with componentwise operations; carrier indexed
/// lexicographically. Materializes tables, so both the carrier and the
/// table sizes are checked against the caps.
FiniteAlgebra power(const FiniteAlgebra& a, int k);

/// Least subset containing gens and closed under every operation of a
/// (worklist closure). Requires gens nonempty unless the signature has
/// constants.
std::vector<Elem> subalgebra_generate(const FiniteAlgebra& a, const std::vector<Elem>& gens);

class Homomorphism {
 public:
  /// Verifies f(omega(a)) = omega(f(a)) for every operation and argument
  /// tuple; throws if the map is not a homomorphism.
  Homomorphism(FiniteAlgebra source, FiniteAlgebra target, std::vector<Elem> map);

  static Homomorphism identity(const FiniteAlgebra& a);

  const FiniteAlgebra& source() const { return *source_; }
  const FiniteAlgebra& target() const { return *target_; }
  Elem operator()(Elem x) const { return map_[x]; }
  const std::vector<Elem>& map() const { return map_; }

 private:
  std::shared_ptr<const FiniteAlgebra> source_;
  std::shared_ptr<const FiniteAlgebra> target_;
  std::vector<Elem> map_;
};

}  // namespace ua
