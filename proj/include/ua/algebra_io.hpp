#pragma once

#include <iosfwd>
#include <string>

#include "ua/algebra.hpp"

namespace ua {

/// Parse error with 1-based line/column, formatted into what().
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Line-oriented algebra file format:
//   algebra <name>
//   carrier <n>
//   op <name>/<arity>
//   <n^arity integers in row-major lexicographic argument order>
// '#' starts a comment. Parsing then re-serializing is the identity up to
// whitespace normalization.
FiniteAlgebra parse_algebra(std::istream& in);
FiniteAlgebra parse_algebra_string(const std::string& text);
FiniteAlgebra load_algebra_file(const std::string& path);

std::string serialize_algebra(const FiniteAlgebra& a);

}  // namespace ua
