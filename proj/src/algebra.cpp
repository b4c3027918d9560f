#include "ua/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace ua {

namespace limits {
namespace {
std::size_t g_max_carrier = 64;
std::size_t g_max_power_carrier = 10'000'000;
std::size_t g_max_table_entries = 10'000'000;
}  // namespace
std::size_t max_carrier() { return g_max_carrier; }
std::size_t max_power_carrier() { return g_max_power_carrier; }
std::size_t max_table_entries() { return g_max_table_entries; }
void set_max_carrier(std::size_t v) { g_max_carrier = v; }
void set_max_power_carrier(std::size_t v) { g_max_power_carrier = v; }
void set_max_table_entries(std::size_t v) { g_max_table_entries = v; }
}  // namespace limits

Signature::Signature(std::vector<OpSym> ops) : ops_(std::move(ops)) {
  std::set<std::string> names;
  for (const auto& op : ops_) {
    if (op.arity < 0) throw std::invalid_argument("operation arity must be >= 0");
    if (!names.insert(op.name).second)
      throw std::invalid_argument("duplicate operation name " + op.name);
  }
}

int Signature::index_of(const std::string& name) const {
  for (int i = 0; i < op_count(); ++i)
    if (ops_[i].name == name) return i;
  return -1;
}

bool Signature::has_constants() const {
  return std::any_of(ops_.begin(), ops_.end(), [](const OpSym& o) { return o.arity == 0; });
}

namespace {

std::size_t checked_pow(std::size_t base, int exp, std::size_t cap, const char* what) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base)
      throw cap_error(std::string(what) + " cap exceeded");
    r *= base;
  }
  if (r > cap) throw cap_error(std::string(what) + " cap exceeded");
  return r;
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(std::string name, Signature sig, int carrier_size,
                             std::vector<std::vector<Elem>> tables)
    : name_(std::move(name)), sig_(std::move(sig)), n_(carrier_size), tables_(std::move(tables)) {
  if (n_ <= 0) throw std::invalid_argument("carrier size must be positive");
  if (tables_.size() != static_cast<std::size_t>(sig_.op_count()))
    throw std::invalid_argument("one table per operation required");
  for (int i = 0; i < sig_.op_count(); ++i) {
    std::size_t expect = checked_pow(static_cast<std::size_t>(n_), sig_.op(i).arity,
                                     limits::max_table_entries(), "table");
    if (tables_[i].size() != expect)
      throw std::invalid_argument("table size mismatch for operation " + sig_.op(i).name);
    for (Elem v : tables_[i])
      if (v < 0 || v >= n_)
        throw std::invalid_argument("table entry out of carrier for operation " + sig_.op(i).name);
  }
}

TermTree TermTree::var(int index) {
  if (index < 0) throw std::invalid_argument("variable index must be >= 0");
  return TermTree(std::variant<int, Apply>(std::in_place_index<0>, index));
}

TermTree TermTree::apply(std::string op_name, std::vector<TermTree> children) {
  return TermTree(std::variant<int, Apply>(
      std::in_place_index<1>, Apply{std::move(op_name), std::move(children)}));
}

int TermTree::max_var() const {
  if (is_var()) return var_index();
  int m = -1;
  for (const auto& c : children()) m = std::max(m, c.max_var());
  return m;
}

std::string TermTree::to_string() const {
  if (is_var()) return "x" + std::to_string(var_index());
  std::string out = "(" + op_name();
  for (const auto& c : children()) out += " " + c.to_string();
  out += ")";
  return out;
}

namespace {

TermTree parse_term(const std::string& s, std::size_t& pos) {
  auto skip = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  };
  skip();
  if (pos >= s.size()) throw std::invalid_argument("term literal: unexpected end");
  if (s[pos] == '(') {
    ++pos;
    skip();
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
           s[pos] != '(' && s[pos] != ')')
      ++pos;
    std::string op = s.substr(start, pos - start);
    if (op.empty()) throw std::invalid_argument("term literal: operation name expected");
    std::vector<TermTree> children;
    for (;;) {
      skip();
      if (pos >= s.size()) throw std::invalid_argument("term literal: missing ')'");
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      children.push_back(parse_term(s, pos));
    }
    return TermTree::apply(std::move(op), std::move(children));
  }
  std::size_t start = pos;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
         s[pos] != '(' && s[pos] != ')')
    ++pos;
  std::string tok = s.substr(start, pos - start);
  if (tok.size() >= 2 && tok[0] == 'x') {
    bool digits = std::all_of(tok.begin() + 1, tok.end(),
                              [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (digits) return TermTree::var(std::stoi(tok.substr(1)));
  }
  // bare operation name: a constant or an op applied to nothing
  return TermTree::apply(tok, {});
}

}  // namespace

TermTree TermTree::parse(const std::string& text) {
  std::size_t pos = 0;
  TermTree t = parse_term(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size())
    throw std::invalid_argument("term literal: trailing input at offset " + std::to_string(pos));
  return t;
}

TermTree TermTree::substitute(std::span<const TermTree> args) const {
  if (is_var()) {
    if (var_index() >= static_cast<int>(args.size()))
      throw std::invalid_argument("substitution: variable out of range");
    return args[var_index()];
  }
  std::vector<TermTree> subst;
  subst.reserve(children().size());
  for (const auto& c : children()) subst.push_back(c.substitute(args));
  return TermTree::apply(op_name(), std::move(subst));
}

Elem eval_term(const FiniteAlgebra& a, const TermTree& t, std::span<const Elem> env) {
  if (t.is_var()) {
    if (t.var_index() >= static_cast<int>(env.size()))
      throw std::invalid_argument("eval_term: variable x" + std::to_string(t.var_index()) +
                                  " out of range for environment of length " +
                                  std::to_string(env.size()));
    return env[t.var_index()];
  }
  int op = a.signature().index_of(t.op_name());
  if (op < 0) throw std::invalid_argument("eval_term: unknown operation " + t.op_name());
  int arity = a.signature().op(op).arity;
  if (arity != static_cast<int>(t.children().size()))
    throw std::invalid_argument("eval_term: arity mismatch for operation " + t.op_name());
  Code code = 0;
  for (const auto& c : t.children())
    code = code * static_cast<Code>(a.carrier_size()) +
           static_cast<Code>(eval_term(a, c, env));
  return a.apply_code(op, code);
}

FiniteAlgebra power(const FiniteAlgebra& a, int k) {
  if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
  const int n = a.carrier_size();
  std::size_t carrier = checked_pow(n, k, limits::max_power_carrier(), "power carrier");
  std::vector<std::vector<Elem>> tables;
  std::vector<Elem> comp(16);
  for (int op = 0; op < a.signature().op_count(); ++op) {
    int r = a.signature().op(op).arity;
    std::size_t entries = checked_pow(carrier, r, limits::max_table_entries(), "power table");
    std::vector<Elem> table(entries);
    std::vector<Elem> args(static_cast<std::size_t>(r) * k);
    for (std::size_t code = 0; code < entries; ++code) {
      // decode r operand codes, each a k-tuple over the base carrier
      Code c = code;
      for (int j = r - 1; j >= 0; --j) {
        Code operand = c % carrier;
        c /= carrier;
        decode_tuple(operand, k, n, args.data() + static_cast<std::size_t>(j) * k);
      }
      Code out = 0;
      for (int i = 0; i < k; ++i) {
        Code argc = 0;
        for (int j = 0; j < r; ++j)
          argc = argc * n + args[static_cast<std::size_t>(j) * k + i];
        out = out * n + a.apply_code(op, argc);
      }
      table[code] = static_cast<Elem>(out);
    }
    tables.push_back(std::move(table));
  }
  (void)comp;
  return FiniteAlgebra(a.name() + "^" + std::to_string(k), a.signature(),
                       static_cast<int>(carrier), std::move(tables));
}

std::vector<Elem> subalgebra_generate(const FiniteAlgebra& a, const std::vector<Elem>& gens) {
  const int n = a.carrier_size();
  if (gens.empty() && !a.signature().has_constants())
    throw std::invalid_argument("subalgebra generation from empty set needs constants");
  std::vector<bool> in(n, false);
  std::vector<Elem> members;
  auto add = [&](Elem x) {
    if (x < 0 || x >= n) throw std::invalid_argument("generator out of carrier");
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  };
  for (Elem g : gens) add(g);
  for (int op = 0; op < a.signature().op_count(); ++op)
    if (a.signature().op(op).arity == 0) add(a.apply_code(op, 0));

  // Worklist closure: rescan until no growth. Carriers are small here;
  // tuple-space closures use the kernel in closure.hpp instead.
  std::size_t stable_from = 0;
  while (stable_from < members.size()) {
    std::size_t frontier_start = stable_from;
    stable_from = members.size();
    for (int op = 0; op < a.signature().op_count(); ++op) {
      int r = a.signature().op(op).arity;
      if (r == 0) continue;
      std::vector<std::size_t> idx(r, 0);
      for (;;) {
        // require at least one argument from the frontier
        bool touches = false;
        for (int j = 0; j < r; ++j)
          if (idx[j] >= frontier_start) {
            touches = true;
            break;
          }
        if (touches) {
          Code code = 0;
          for (int j = 0; j < r; ++j) code = code * n + members[idx[j]];
          add(a.apply_code(op, code));
        }
        int j = r - 1;
        while (j >= 0 && ++idx[j] == stable_from) idx[j--] = 0;
        if (j < 0) break;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

Homomorphism::Homomorphism(FiniteAlgebra source, FiniteAlgebra target, std::vector<Elem> map)
    : source_(std::make_shared<FiniteAlgebra>(std::move(source))),
      target_(std::make_shared<FiniteAlgebra>(std::move(target))),
      map_(std::move(map)) {
  const FiniteAlgebra& A = *source_;
  const FiniteAlgebra& B = *target_;
  if (A.signature() != B.signature())
    throw std::invalid_argument("homomorphism requires a common signature");
  if (map_.size() != static_cast<std::size_t>(A.carrier_size()))
    throw std::invalid_argument("homomorphism map must be total on the source");
  for (Elem v : map_)
    if (v < 0 || v >= B.carrier_size())
      throw std::invalid_argument("homomorphism map value out of target carrier");
  const int n = A.carrier_size();
  std::vector<Elem> args;
  for (int op = 0; op < A.signature().op_count(); ++op) {
    int r = A.signature().op(op).arity;
    std::size_t tuples = 1;
    for (int i = 0; i < r; ++i) tuples *= n;
    args.assign(r, 0);
    for (std::size_t code = 0; code < tuples; ++code) {
      decode_tuple(code, r, n, args.data());
      Code image_code = 0;
      for (int j = 0; j < r; ++j)
        image_code = image_code * B.carrier_size() + map_[args[j]];
      if (map_[A.apply_code(op, code)] != B.apply_code(op, image_code))
        throw std::invalid_argument("map is not a homomorphism (fails on " +
                                    A.signature().op(op).name + ")");
    }
  }
}

Homomorphism Homomorphism::identity(const FiniteAlgebra& a) {
  std::vector<Elem> map(a.carrier_size());
  for (int i = 0; i < a.carrier_size(); ++i) map[i] = i;
  return Homomorphism(a, a, std::move(map));
}

}  // namespace ua
