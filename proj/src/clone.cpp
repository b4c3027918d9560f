#include "ua/clone.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace ua {

namespace {

std::size_t table_size(int n, int k) {
  std::size_t s = 1;
  for (int i = 0; i < k; ++i) s *= static_cast<std::size_t>(n);
  return s;
}

std::vector<Elem> projection_table(int n, int k, int var) {
  std::size_t size = table_size(n, k);
  std::vector<Elem> t(size);
  std::vector<Elem> args(k);
  for (std::size_t code = 0; code < size; ++code) {
    decode_tuple(code, k, n, args.data());
    t[code] = args[var];
  }
  return t;
}

}  // namespace

CloneResult clone_generate_until(const FiniteAlgebra& a, int k, std::size_t budget,
                                 const std::function<bool(const CloneElement&)>& visit) {
  const int n = a.carrier_size();
  if (table_size(n, k) > limits::max_table_entries())
    throw cap_error("clone table cap exceeded");
  const std::size_t tsize = table_size(n, k);

  CloneResult result;
  std::map<std::vector<Elem>, int> seen;
  auto add = [&](std::vector<Elem> table, TermTree witness) -> bool {
    auto [it, fresh] = seen.emplace(std::move(table), static_cast<int>(result.elements.size()));
    if (!fresh) return true;
    result.elements.push_back(CloneElement{k, it->first, std::move(witness)});
    return visit(result.elements.back());
  };

  for (int v = 0; v < k; ++v)
    if (!add(projection_table(n, k, v), TermTree::var(v))) return result;

  std::size_t frontier_start = 0;
  while (frontier_start < result.elements.size()) {
    std::size_t frontier_end = result.elements.size();
    if (frontier_end > budget) return result;  // budget exhausted, incomplete

    for (int op = 0; op < a.signature().op_count(); ++op) {
      const int r = a.signature().op(op).arity;
      if (r == 0) {
        Elem c = a.apply_code(op, 0);
        if (!add(std::vector<Elem>(tsize, c), TermTree::apply(a.signature().op(op).name, {})))
          return result;
        continue;
      }
      std::vector<std::size_t> idx(r, 0);
      for (;;) {
        bool touches = false;
        for (int j = 0; j < r; ++j)
          if (idx[j] >= frontier_start) {
            touches = true;
            break;
          }
        if (touches) {
          std::vector<Elem> table(tsize);
          std::vector<Elem> args(r);
          for (std::size_t pos = 0; pos < tsize; ++pos) {
            Code c = 0;
            for (int j = 0; j < r; ++j)
              c = c * n + result.elements[idx[j]].table[pos];
            table[pos] = a.apply_code(op, c);
          }
          std::vector<TermTree> children;
          children.reserve(r);
          for (int j = 0; j < r; ++j) children.push_back(result.elements[idx[j]].witness);
          if (!add(std::move(table),
                   TermTree::apply(a.signature().op(op).name, std::move(children))))
            return result;
          if (result.elements.size() > budget) return result;
        }
        int j = r - 1;
        while (j >= 0 && ++idx[j] == frontier_end) idx[j--] = 0;
        if (j < 0) break;
      }
    }
    frontier_start = frontier_end;
  }
  result.complete = true;
  return result;
}

CloneResult clone_generate(const FiniteAlgebra& a, int k, std::size_t budget) {
  return clone_generate_until(a, k, budget, [](const CloneElement&) { return true; });
}

bool is_maltsev_table(int n, const std::vector<Elem>& table) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (table[(static_cast<Code>(x) * n + x) * n + y] != y) return false;  // p(x,x,y)=y
      if (table[(static_cast<Code>(x) * n + y) * n + y] != x) return false;  // p(x,y,y)=x
    }
  return true;
}

SearchResult<TermWitness> find_maltsev(const FiniteAlgebra& a, std::size_t budget) {
  const int n = a.carrier_size();
  std::optional<CloneElement> hit;
  CloneResult res = clone_generate_until(a, 3, budget, [&](const CloneElement& e) {
    if (is_maltsev_table(n, e.table)) {
      hit = e;
      return false;
    }
    return true;
  });
  if (hit)
    return {SearchStatus::found, TermWitness{WitnessKind::maltsev, {std::move(*hit)}}};
  if (!res.complete) return {SearchStatus::budget_exhausted, std::nullopt};
  return {SearchStatus::none, std::nullopt};
}

namespace {

Elem table_at(const CloneElement& e, int n, std::initializer_list<Elem> args) {
  Code c = 0;
  for (Elem x : args) c = c * n + x;
  return e.table[c];
}

}  // namespace

TermWitness day_from_maltsev(const FiniteAlgebra& a, const CloneElement& p) {
  const int n = a.carrier_size();
  if (p.arity != 3 || !is_maltsev_table(n, p.table))
    throw std::invalid_argument("day_from_maltsev: not a Mal'tsev operation");

  const std::size_t tsize = table_size(n, 4);
  std::vector<Elem> m1(tsize);
  std::vector<Elem> args(4);
  for (std::size_t code = 0; code < tsize; ++code) {
    decode_tuple(code, 4, n, args.data());
    Elem inner = table_at(p, n, {args[0], args[1], args[2]});
    m1[code] = table_at(p, n, {args[0], inner, args[3]});
  }
  std::vector<TermTree> inner_args = {TermTree::var(0), TermTree::var(1), TermTree::var(2)};
  TermTree inner_tree = p.witness.substitute(inner_args);
  std::vector<TermTree> outer_args = {TermTree::var(0), inner_tree, TermTree::var(3)};
  TermTree m1_tree = p.witness.substitute(outer_args);

  TermWitness w{WitnessKind::day,
                {CloneElement{4, projection_table(n, 4, 0), TermTree::var(0)},
                 CloneElement{4, std::move(m1), std::move(m1_tree)},
                 CloneElement{4, projection_table(n, 4, 3), TermTree::var(3)}}};
  std::string err = verify_witness(a, w);
  if (!err.empty()) throw std::logic_error("day_from_maltsev: " + err);
  return w;
}

namespace {

// Path search shared by find_day and find_jonsson. Chains alternate two
// linking identities; nodes already satisfy the per-term identity.
SearchResult<TermWitness> chain_search(const FiniteAlgebra& a, int arity, int max_len,
                                       std::size_t budget, WitnessKind kind,
                                       const std::function<bool(const CloneElement&)>& node_ok,
                                       const std::function<std::vector<Elem>(const CloneElement&)>& even_sig,
                                       const std::function<std::vector<Elem>(const CloneElement&)>& odd_sig) {
  CloneResult clone = clone_generate(a, arity, budget);

  std::vector<int> nodes;  // indices into clone.elements
  for (std::size_t i = 0; i < clone.elements.size(); ++i)
    if (node_ok(clone.elements[i])) nodes.push_back(static_cast<int>(i));

  const std::vector<Elem> first_proj = projection_table(a.carrier_size(), arity, 0);
  const std::vector<Elem> last_proj = projection_table(a.carrier_size(), arity, arity - 1);
  int start = -1;
  for (int ni : nodes)
    if (clone.elements[ni].table == first_proj) start = ni;
  if (start < 0) {
    // the first projection always satisfies the per-term identity
    return {clone.complete ? SearchStatus::none : SearchStatus::budget_exhausted, std::nullopt};
  }

  // group nodes by link signature for O(1)-ish neighbor expansion
  std::map<std::vector<Elem>, std::vector<int>> by_even, by_odd;
  for (int ni : nodes) {
    by_even[even_sig(clone.elements[ni])].push_back(ni);
    by_odd[odd_sig(clone.elements[ni])].push_back(ni);
  }

  // BFS over (node, parity of the chain index)
  struct State {
    int node;
    int parity;
  };
  std::map<std::pair<int, int>, std::pair<int, int>> prev;  // state -> predecessor state
  std::queue<std::pair<State, int>> q;                      // state, chain index
  auto push = [&](State s, int len, std::pair<int, int> from) {
    auto key = std::make_pair(s.node, s.parity);
    if (prev.count(key)) return;
    prev[key] = from;
    q.push({s, len});
  };
  push({start, 0}, 0, {-1, -1});
  std::optional<std::pair<int, int>> goal;
  int goal_len = -1;
  while (!q.empty() && !goal) {
    auto [s, len] = q.front();
    q.pop();
    if (clone.elements[s.node].table == last_proj) {
      goal = std::make_pair(s.node, s.parity);
      goal_len = len;
      break;
    }
    if (len >= max_len) continue;
    const auto& sig = (s.parity == 0) ? even_sig(clone.elements[s.node])
                                      : odd_sig(clone.elements[s.node]);
    const auto& bucket = (s.parity == 0) ? by_even[sig] : by_odd[sig];
    for (int ni : bucket) push({ni, 1 - s.parity}, len + 1, {s.node, s.parity});
  }
  (void)goal_len;
  if (!goal) {
    return {clone.complete ? SearchStatus::none : SearchStatus::budget_exhausted, std::nullopt};
  }

  std::vector<int> path;
  for (std::pair<int, int> at = *goal; at.first >= 0; at = prev[at]) path.push_back(at.first);
  std::reverse(path.begin(), path.end());

  TermWitness w{kind, {}};
  for (int ni : path) w.chain.push_back(clone.elements[ni]);
  std::string err = verify_witness(a, w);
  if (!err.empty()) throw std::logic_error("chain search produced a bad chain: " + err);
  return {SearchStatus::found, std::move(w)};
}

}  // namespace

SearchResult<TermWitness> find_day(const FiniteAlgebra& a, int max_len, std::size_t budget) {
  const int n = a.carrier_size();
  auto node_ok = [n](const CloneElement& e) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (table_at(e, n, {x, y, y, x}) != x) return false;  // (D1)
    return true;
  };
  auto even_sig = [n](const CloneElement& e) {  // values of m(x,x,y,y)
    std::vector<Elem> sig;
    sig.reserve(static_cast<std::size_t>(n) * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) sig.push_back(table_at(e, n, {x, x, y, y}));
    return sig;
  };
  auto odd_sig = [n](const CloneElement& e) {  // values of m(x,y,y,z)
    std::vector<Elem> sig;
    sig.reserve(static_cast<std::size_t>(n) * n * n);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        for (Elem z = 0; z < n; ++z) sig.push_back(table_at(e, n, {x, y, y, z}));
    return sig;
  };
  return chain_search(a, 4, max_len, budget, WitnessKind::day, node_ok, even_sig, odd_sig);
}

SearchResult<TermWitness> find_jonsson(const FiniteAlgebra& a, int max_len, std::size_t budget) {
  const int n = a.carrier_size();
  auto node_ok = [n](const CloneElement& e) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (table_at(e, n, {x, y, x}) != x) return false;  // (J3)
    return true;
  };
  auto even_sig = [n](const CloneElement& e) {  // values of d(x,x,y)
    std::vector<Elem> sig;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) sig.push_back(table_at(e, n, {x, x, y}));
    return sig;
  };
  auto odd_sig = [n](const CloneElement& e) {  // values of d(x,y,y)
    std::vector<Elem> sig;
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) sig.push_back(table_at(e, n, {x, y, y}));
    return sig;
  };
  return chain_search(a, 3, max_len, budget, WitnessKind::jonsson, node_ok, even_sig, odd_sig);
}

std::string verify_witness(const FiniteAlgebra& a, const TermWitness& w) {
  const int n = a.carrier_size();
  std::ostringstream err;
  if (w.chain.empty()) return "empty chain";
  const int k = static_cast<int>(w.chain.size()) - 1;

  if (w.kind == WitnessKind::maltsev) {
    if (w.chain.size() != 1 || w.chain[0].arity != 3) return "Mal'tsev witness must be one ternary term";
    if (!is_maltsev_table(n, w.chain[0].table)) return "Mal'tsev identities fail";
    return "";
  }

  if (w.kind == WitnessKind::day) {
    for (const auto& e : w.chain)
      if (e.arity != 4) return "Day chain terms must be quaternary";
    if (w.chain[0].table != projection_table(n, 4, 0)) return "(D2) fails: m_0 != x";
    if (w.chain[k].table != projection_table(n, 4, 3)) return "(D3) fails: m_k != w";
    for (int i = 0; i <= k; ++i)
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (table_at(w.chain[i], n, {x, y, y, x}) != x) {
            err << "(D1) fails at i=" << i << " x=" << x << " y=" << y;
            return err.str();
          }
    for (int i = 0; i < k; ++i) {
      if (i % 2 == 0) {
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y)
            if (table_at(w.chain[i], n, {x, x, y, y}) !=
                table_at(w.chain[i + 1], n, {x, x, y, y})) {
              err << "(D4) fails at i=" << i;
              return err.str();
            }
      } else {
        for (Elem x = 0; x < n; ++x)
          for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
              if (table_at(w.chain[i], n, {x, y, y, z}) !=
                  table_at(w.chain[i + 1], n, {x, y, y, z})) {
                err << "(D5) fails at i=" << i;
                return err.str();
              }
      }
    }
    return "";
  }

  // Jonsson
  for (const auto& e : w.chain)
    if (e.arity != 3) return "Jonsson chain terms must be ternary";
  if (w.chain[0].table != projection_table(n, 3, 0)) return "(J1) fails: d_0 != x";
  if (w.chain[k].table != projection_table(n, 3, 2)) return "(J2) fails: d_k != z";
  for (int i = 0; i <= k; ++i)
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y)
        if (table_at(w.chain[i], n, {x, y, x}) != x) {
          err << "(J3) fails at i=" << i;
          return err.str();
        }
  for (int i = 0; i < k; ++i) {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        if (i % 2 == 0) {
          if (table_at(w.chain[i], n, {x, x, y}) != table_at(w.chain[i + 1], n, {x, x, y})) {
            err << "(J4) fails at i=" << i;
            return err.str();
          }
        } else {
          if (table_at(w.chain[i], n, {x, y, y}) != table_at(w.chain[i + 1], n, {x, y, y})) {
            err << "(J5) fails at i=" << i;
            return err.str();
          }
        }
      }
  }
  return "";
}

CloneElement clone_element_from_term(const FiniteAlgebra& a, int arity, const TermTree& t) {
  const int n = a.carrier_size();
  if (t.max_var() >= arity)
    throw std::invalid_argument("term uses variables beyond the declared arity");
  std::size_t tsize = table_size(n, arity);
  std::vector<Elem> table(tsize);
  std::vector<Elem> env(arity);
  for (std::size_t code = 0; code < tsize; ++code) {
    decode_tuple(code, arity, n, env.data());
    table[code] = eval_term(a, t, env);
  }
  return CloneElement{arity, std::move(table), t};
}

bool witness_tables_consistent(const FiniteAlgebra& a, const TermWitness& w) {
  for (const auto& e : w.chain) {
    CloneElement again = clone_element_from_term(a, e.arity, e.witness);
    if (again.table != e.table) return false;
  }
  return true;
}

TermWitness witness_from_terms(const FiniteAlgebra& a, WitnessKind kind,
                               const std::vector<std::string>& term_texts) {
  int arity = (kind == WitnessKind::day) ? 4 : 3;
  TermWitness w{kind, {}};
  for (const auto& text : term_texts)
    w.chain.push_back(clone_element_from_term(a, arity, TermTree::parse(text)));
  std::string err = verify_witness(a, w);
  if (!err.empty()) throw std::invalid_argument("supplied term chain invalid: " + err);
  return w;
}

}  // namespace ua
