#include "ua/algebra_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace ua {

parse_error::parse_error(const std::string& msg, int line, int column)
    : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                         std::to_string(column)),
      line_(line),
      column_(column) {}

namespace {

// Whitespace-separated token stream that strips '#' comments and tracks
// line/column for error reporting.
class TokenStream {
 public:
  explicit TokenStream(std::istream& in) : in_(in) {}

  bool next(std::string& tok) {
    tok.clear();
    for (;;) {
      int c = get();
      if (c == EOF) return false;
      if (c == '#') {
        while (c != EOF && c != '\n') c = get();
        continue;
      }
      if (std::isspace(c)) continue;
      tok_line_ = line_;
      tok_col_ = col_ - 1;
      while (c != EOF && !std::isspace(c) && c != '#') {
        tok.push_back(static_cast<char>(c));
        c = get();
      }
      if (c == '#') unget();
      return true;
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error(msg, tok_line_, tok_col_);
  }

  int expect_int(const std::string& what) {
    std::string tok;
    if (!next(tok)) fail("expected " + what + ", got end of input");
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) fail("expected " + what + ", got '" + tok + "'");
      return v;
    } catch (const parse_error&) {
      throw;
    } catch (...) {
      fail("expected " + what + ", got '" + tok + "'");
    }
  }

 private:
  int get() {
    int c = in_.get();
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else if (c != EOF) {
      ++col_;
    }
    return c;
  }
  void unget() {
    in_.unget();
    --col_;
  }

  std::istream& in_;
  int line_ = 1, col_ = 1;
  int tok_line_ = 1, tok_col_ = 1;
};

}  // namespace

FiniteAlgebra parse_algebra(std::istream& in) {
  TokenStream ts(in);
  std::string tok;
  if (!ts.next(tok) || tok != "algebra") ts.fail("expected 'algebra <name>'");
  std::string name;
  if (!ts.next(name)) ts.fail("expected algebra name");
  if (!ts.next(tok) || tok != "carrier") ts.fail("expected 'carrier <n>'");
  int n = ts.expect_int("carrier size");
  if (n <= 0) ts.fail("carrier size must be positive");
  if (static_cast<std::size_t>(n) > limits::max_carrier())
    throw cap_error("carrier cap exceeded: " + std::to_string(n) + " > " +
                    std::to_string(limits::max_carrier()));

  std::vector<OpSym> ops;
  std::vector<std::vector<Elem>> tables;
  while (ts.next(tok)) {
    if (tok != "op") ts.fail("expected 'op <name>/<arity>', got '" + tok + "'");
    std::string decl;
    if (!ts.next(decl)) ts.fail("expected operation declaration");
    auto slash = decl.rfind('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == decl.size())
      ts.fail("operation declaration must be <name>/<arity>");
    std::string op_name = decl.substr(0, slash);
    int arity;
    try {
      arity = std::stoi(decl.substr(slash + 1));
    } catch (...) {
      ts.fail("bad arity in '" + decl + "'");
    }
    if (arity < 0) ts.fail("arity must be >= 0");
    std::size_t entries = 1;
    for (int i = 0; i < arity; ++i) {
      entries *= static_cast<std::size_t>(n);
      if (entries > limits::max_table_entries()) throw cap_error("table cap exceeded");
    }
    std::vector<Elem> table(entries);
    for (std::size_t i = 0; i < entries; ++i) {
      int v = ts.expect_int("table entry");
      if (v < 0 || v >= n) ts.fail("table entry out of carrier range");
      table[i] = v;
    }
    ops.push_back({std::move(op_name), arity});
    tables.push_back(std::move(table));
  }
  return FiniteAlgebra(name, Signature(std::move(ops)), n, std::move(tables));
}

FiniteAlgebra parse_algebra_string(const std::string& text) {
  std::istringstream in(text);
  return parse_algebra(in);
}

FiniteAlgebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open algebra file " + path);
  return parse_algebra(in);
}

std::string serialize_algebra(const FiniteAlgebra& a) {
  std::ostringstream os;
  os << "algebra " << a.name() << "\n";
  os << "carrier " << a.carrier_size() << "\n";
  const int n = a.carrier_size();
  for (int op = 0; op < a.signature().op_count(); ++op) {
    const OpSym& sym = a.signature().op(op);
    os << "op " << sym.name << "/" << sym.arity << "\n";
    const auto& table = a.table(op);
    // one row per leading-argument group, so binary tables read as matrices
    std::size_t row = sym.arity == 0 ? 1 : static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < table.size(); ++i) {
      os << table[i];
      os << ((i % row == row - 1) ? '\n' : ' ');
    }
  }
  return os.str();
}

}  // namespace ua
