// Copyright 2026 The polymeta Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polymeta/identities.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "polymeta/error.hpp"

namespace polymeta {

Term Term::apply(std::string symbol, std::initializer_list<int> vars) {
  std::vector<Term> args;
  for (int v : vars) args.push_back(variable(v));
  return apply(std::move(symbol), std::move(args));
}

int Term::depth() const {
  if (is_variable()) return 0;
  int d = 0;
  for (const auto& a : args) d = std::max(d, a.depth());
  return d + 1;
}

int IdentitySet::arity(std::string_view name) const {
  for (const auto& s : symbols)
    if (s.name == name) return s.arity;
  return -1;
}

int IdentitySet::max_arity() const {
  int m = 0;
  for (const auto& s : symbols) m = std::max(m, s.arity);
  return m;
}

void IdentitySet::declare(const std::string& name, int ar) {
  if (ar < 1) throw InvalidArgument("symbol '" + name + "' must have positive arity");
  int known = arity(name);
  if (known < 0)
    symbols.push_back({name, ar});
  else if (known != ar)
    throw InvalidArgument("symbol '" + name + "' used with arities " + std::to_string(known) +
                          " and " + std::to_string(ar));
}

namespace {

void declare_term(IdentitySet& s, const Term& t) {
  if (t.is_variable()) return;
  s.declare(t.symbol, static_cast<int>(t.args.size()));
  for (const auto& a : t.args) declare_term(s, a);
}

void collect_vars(const Term& t, std::vector<int>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, out);
}

std::vector<int> identity_vars(const Identity& id) {
  std::vector<int> v;
  collect_vars(id.lhs, v);
  collect_vars(id.rhs, v);
  return v;
}

bool is_linear(const Identity& id) { return id.lhs.depth() <= 1 && id.rhs.depth() <= 1; }

// f(x,...,x) = x in either orientation.
bool is_idempotence_for(const Identity& id, const std::string& f) {
  auto check = [&](const Term& app, const Term& var) {
    if (!var.is_variable() || app.is_variable() || app.symbol != f) return false;
    return std::all_of(app.args.begin(), app.args.end(),
                       [&](const Term& a) { return a.is_variable() && a.var == var.var; });
  };
  return check(id.lhs, id.rhs) || check(id.rhs, id.lhs);
}

class Parser {
 public:
  Parser(std::string_view line, std::string where) : s_(line), where_(std::move(where)) {}

  Identity identity() {
    Identity id;
    id.lhs = term();
    skip();
    if (!eat('=')) fail("expected '='");
    id.rhs = term();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return id;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(where_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Term term() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a variable or a symbol");
    std::string name(s_.substr(start, pos_ - start));
    if (eat('(')) {
      if (!std::isalpha(static_cast<unsigned char>(name[0])) && name[0] != '_')
        fail("symbol names must start with a letter");
      std::vector<Term> args;
      if (eat(')')) fail("symbol '" + name + "' needs at least one argument");
      do {
        args.push_back(term());
      } while (eat(','));
      if (!eat(')')) fail("expected ')'");
      return Term::apply(std::move(name), std::move(args));
    }
    if (name.size() != 1 || !std::islower(static_cast<unsigned char>(name[0])))
      fail("'" + name + "' is not a variable (variables are single lowercase letters)");
    return Term::variable(name[0] - 'a');
  }

  std::string_view s_;
  std::string where_;
  std::size_t pos_ = 0;
};

}  // namespace

void IdentitySet::add(Identity id) {
  declare_term(*this, id.lhs);
  declare_term(*this, id.rhs);
  identities.push_back(std::move(id));
}

IdentitySet parse_identities(std::string_view text, std::string_view source) {
  IdentitySet out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    if (line.back() == '\r') line.remove_suffix(1);
    std::string where = std::string(source.empty() ? "<identities>" : source) + ":" +
                        std::to_string(line_no);
    Identity id = Parser(line, where).identity();
    try {
      out.add(std::move(id));
    } catch (const InvalidArgument& e) {
      throw ParseError(where, e.what());
    }
  }
  return out;
}

std::string to_string(const Term& t) {
  if (t.is_variable()) {
    if (t.var < 26) return std::string(1, static_cast<char>('a' + t.var));
    return "v" + std::to_string(t.var);
  }
  std::string s = t.symbol + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i) s += ",";
    s += to_string(t.args[i]);
  }
  return s + ")";
}

std::string to_string(const IdentitySet& sigma) {
  std::string s;
  for (const auto& id : sigma.identities) s += to_string(id.lhs) + " = " + to_string(id.rhs) + "\n";
  return s;
}

IdentitySet maltsev_identities() {
  constexpr int x = 'x' - 'a', y = 'y' - 'a';
  IdentitySet s;
  s.add({Term::apply("m", {x, x, y}), Term::variable(y)});
  s.add({Term::apply("m", {y, x, x}), Term::variable(y)});
  return s;
}

IdentitySet siggers_identity() {
  constexpr int a = 0, r = 'r' - 'a', e = 'e' - 'a';
  IdentitySet s;
  s.add({Term::apply("s", {a, r, e, a}), Term::apply("s", {r, a, r, e})});
  return s;
}

IdentitySet with_idempotence(IdentitySet sigma) {
  const auto symbols = sigma.symbols;
  constexpr int x = 'x' - 'a';
  for (const auto& f : symbols) {
    bool present = std::any_of(sigma.identities.begin(), sigma.identities.end(),
                               [&](const Identity& id) { return is_idempotence_for(id, f.name); });
    if (present) continue;
    std::vector<Term> args(static_cast<std::size_t>(f.arity), Term::variable(x));
    sigma.identities.push_back({Term::apply(f.name, std::move(args)), Term::variable(x)});
  }
  return sigma;
}

Classification classify(const IdentitySet& sigma) {
  Classification c;
  c.linear = std::all_of(sigma.identities.begin(), sigma.identities.end(), is_linear);
  c.height_one = std::all_of(sigma.identities.begin(), sigma.identities.end(), [](const Identity& id) {
    return id.lhs.depth() == 1 && id.rhs.depth() == 1;
  });
  c.idempotent = std::all_of(sigma.symbols.begin(), sigma.symbols.end(), [&](const FunctionSymbol& f) {
    return std::any_of(sigma.identities.begin(), sigma.identities.end(),
                       [&](const Identity& id) { return is_idempotence_for(id, f.name); });
  });
  return c;
}

namespace {

Element evaluate(const Term& t, const Interpretation& ops, const std::vector<int>& slot,
                 const std::vector<Element>& value, std::vector<Element>& scratch) {
  if (t.is_variable()) return value[static_cast<std::size_t>(slot[static_cast<std::size_t>(t.var)])];
  std::vector<Element> args;
  args.reserve(t.args.size());
  for (const auto& a : t.args) args.push_back(evaluate(a, ops, slot, value, scratch));
  return ops.at(t.symbol)(args);
}

Element common_domain(const Interpretation& ops, const IdentitySet& sigma, Element domain) {
  for (const auto& f : sigma.symbols) {
    auto it = ops.find(f.name);
    if (it == ops.end()) throw InvalidArgument("symbol '" + f.name + "' is not interpreted");
    if (it->second.arity() != f.arity)
      throw InvalidArgument("symbol '" + f.name + "' interpreted with the wrong arity");
    if (domain == 0) domain = it->second.domain();
    if (it->second.domain() != domain) throw InvalidArgument("operations have different domains");
  }
  return domain == 0 ? 1 : domain;
}

}  // namespace

bool satisfies(const Interpretation& ops, const IdentitySet& sigma, Element domain) {
  domain = common_domain(ops, sigma, domain);
  std::vector<Element> scratch;
  for (const auto& id : sigma.identities) {
    auto vars = identity_vars(id);
    int max_var = 0;
    for (int v : vars) max_var = std::max(max_var, v);
    std::vector<int> slot(static_cast<std::size_t>(max_var) + 1, 0);
    for (std::size_t i = 0; i < vars.size(); ++i) slot[static_cast<std::size_t>(vars[i])] = static_cast<int>(i);
    std::vector<Element> value(vars.size(), 0);
    while (true) {
      if (evaluate(id.lhs, ops, slot, value, scratch) != evaluate(id.rhs, ops, slot, value, scratch))
        return false;
      std::size_t j = 0;
      while (j < value.size() && ++value[j] == domain) value[j++] = 0;
      if (j == value.size()) break;
    }
  }
  return true;
}

bool is_trivial(const IdentitySet& sigma) {
  const auto& syms = sigma.symbols;
  std::vector<int> choice(syms.size(), 0);
  while (true) {
    Interpretation ops;
    for (std::size_t i = 0; i < syms.size(); ++i)
      ops.emplace(syms[i].name, OperationTable::projection(2, syms[i].arity, choice[i]));
    if (satisfies(ops, sigma, 2)) return true;
    std::size_t j = 0;
    while (j < choice.size() && ++choice[j] == syms[j].arity) choice[j++] = 0;
    if (j == choice.size()) return false;
  }
}

// ---------------------------------------------------------------------------
// Closure

std::size_t TermEquivalence::find(std::size_t i) const { return parent_[i]; }

std::size_t TermEquivalence::class_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < parent_.size(); ++i) c += parent_[i] == i;
  return c;
}

std::size_t TermEquivalence::index(const Term& t) const {
  if (t.is_variable()) {
    if (t.var >= variables_) throw InvalidArgument("variable outside the closure's variable set");
    return static_cast<std::size_t>(t.var);
  }
  for (std::size_t s = 0; s < symbols_.size(); ++s) {
    if (symbols_[s].name != t.symbol) continue;
    if (static_cast<int>(t.args.size()) != symbols_[s].arity)
      throw InvalidArgument("arity mismatch for '" + t.symbol + "'");
    std::size_t code = 0;
    for (std::size_t i = t.args.size(); i-- > 0;) {
      const auto& a = t.args[i];
      if (!a.is_variable()) throw InvalidArgument("term is not linear");
      if (a.var >= variables_) throw InvalidArgument("variable outside the closure's variable set");
      code = code * static_cast<std::size_t>(variables_) + static_cast<std::size_t>(a.var);
    }
    return offsets_[s] + code;
  }
  throw InvalidArgument("unknown symbol '" + t.symbol + "'");
}

Term TermEquivalence::term(std::size_t index) const {
  if (index < static_cast<std::size_t>(variables_)) return Term::variable(static_cast<int>(index));
  std::size_t s = 0;
  while (s + 1 < symbols_.size() && offsets_[s + 1] <= index) ++s;
  std::size_t code = index - offsets_[s];
  std::vector<Term> args;
  for (int i = 0; i < symbols_[s].arity; ++i) {
    args.push_back(Term::variable(static_cast<int>(code % static_cast<std::size_t>(variables_))));
    code /= static_cast<std::size_t>(variables_);
  }
  return Term::apply(symbols_[s].name, std::move(args));
}

bool TermEquivalence::equivalent(const Term& a, const Term& b) const {
  return find(index(a)) == find(index(b));
}

std::optional<int> TermEquivalence::equivalent_variable(const Term& t) const {
  const auto root = find(index(t));
  for (int v = 0; v < variables_; ++v)
    if (find(static_cast<std::size_t>(v)) == root) return v;
  return std::nullopt;
}

TermEquivalence term_equiv_closure(const IdentitySet& sigma, const Limits& limits) {
  if (!classify(sigma).linear) throw InvalidArgument("closure requires linear identities");
  TermEquivalence eq;
  int n = std::max(2, sigma.max_arity());
  for (const auto& id : sigma.identities) n = std::max(n, static_cast<int>(identity_vars(id).size()));
  eq.variables_ = n;
  eq.symbols_ = sigma.symbols;

  auto guarded_pow = [&](int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) {
      r *= static_cast<std::uint64_t>(n);
      if (r > limits.closure_terms)
        throw LimitExceeded("term closure exceeds the bound of " + std::to_string(limits.closure_terms));
    }
    return r;
  };
  std::uint64_t total = static_cast<std::uint64_t>(n);
  for (const auto& f : sigma.symbols) {
    eq.offsets_.push_back(total);
    total += guarded_pow(f.arity);
    if (total > limits.closure_terms)
      throw LimitExceeded("term closure exceeds the bound of " + std::to_string(limits.closure_terms));
  }
  eq.offsets_.push_back(total);  // sentinel used by term()

  std::vector<std::size_t> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  eq.parent_ = parent;  // index() needs offsets only; parent filled below

  auto substitute = [](const Term& t, const std::vector<int>& vars, const std::vector<int>& image) {
    auto map = [&](int v) {
      return image[static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin())];
    };
    if (t.is_variable()) return Term::variable(map(t.var));
    Term out = Term::apply(t.symbol, std::vector<Term>{});
    for (const auto& a : t.args) out.args.push_back(Term::variable(map(a.var)));
    return out;
  };

  for (const auto& id : sigma.identities) {
    auto vars = identity_vars(id);
    guarded_pow(static_cast<int>(vars.size()));
    std::vector<int> image(vars.size(), 0);
    while (true) {
      auto a = root(eq.index(substitute(id.lhs, vars, image)));
      auto b = root(eq.index(substitute(id.rhs, vars, image)));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
      std::size_t j = 0;
      while (j < image.size() && ++image[j] == n) image[j++] = 0;
      if (j == image.size()) break;
    }
  }
  for (std::size_t i = 0; i < total; ++i) parent[i] = root(i);
  eq.parent_ = std::move(parent);
  return eq;
}

std::string_view to_string(Verdict3 v) {
  switch (v) {
    case Verdict3::yes: return "yes";
    case Verdict3::no: return "no";
    case Verdict3::unknown: break;
  }
  return "unknown";
}

std::string_view to_string(Consistency c) {
  switch (c) {
    case Consistency::consistent: return "consistent";
    case Consistency::inconsistent: return "inconsistent";
    case Consistency::unknown: break;
  }
  return "unknown";
}

namespace {

// The case split of the domain-extension construction, given the closure.
Interpretation extend_with(const Interpretation& ops, const IdentitySet& sigma,
                           const TermEquivalence& eq, Element fresh,
                           const std::vector<Element>& retraction) {
  Interpretation out;
  const Element domain = fresh + 1;
  for (const auto& [name, op] : ops) {
    const bool constrained = sigma.arity(name) >= 0;
    const auto k = static_cast<std::size_t>(op.arity());
    std::vector<Element> projected(k);
    out.emplace(name, OperationTable::from_function(domain, op.arity(), [&](std::span<const Element> a) {
      if (constrained) {
        // xi: first occurrence order of distinct arguments.
        std::vector<Element> seen;
        std::vector<Term> args;
        for (Element x : a) {
          auto it = std::find(seen.begin(), seen.end(), x);
          if (it == seen.end()) {
            seen.push_back(x);
            it = seen.end() - 1;
          }
          args.push_back(Term::variable(static_cast<int>(it - seen.begin())));
        }
        if (auto v = eq.equivalent_variable(Term::apply(name, std::move(args))))
          if (static_cast<std::size_t>(*v) < seen.size()) return seen[static_cast<std::size_t>(*v)];
      }
      for (std::size_t i = 0; i < k; ++i) projected[i] = retraction[static_cast<std::size_t>(a[i])];
      return op(projected);
    }));
  }
  return out;
}

Interpretation constant_ops(const IdentitySet& sigma) {
  Interpretation ops;
  for (const auto& f : sigma.symbols) ops.emplace(f.name, OperationTable(1, f.arity));
  return ops;
}

// Two-element model built by extending the one-element clone; verified.
bool closure_witness(const IdentitySet& sigma, const TermEquivalence& eq) {
  auto model = extend_with(constant_ops(sigma), sigma, eq, 1, {0, 0});
  return satisfies(model, sigma, 2);
}

}  // namespace

Verdict3 entails_x_eq_y(const IdentitySet& sigma, const Limits& limits) {
  if (!classify(sigma).linear) throw InvalidArgument("entailment check requires linear identities");
  try {
    auto eq = term_equiv_closure(sigma, limits);
    if (eq.equivalent(Term::variable(0), Term::variable(1))) return Verdict3::yes;
    if (closure_witness(sigma, eq)) return Verdict3::no;
  } catch (const LimitExceeded&) {
  }
  // Without the closure: any linear sigma that does not entail x = y has a
  // two-element model, so an exhausted search on {0,1} settles the question.
  auto two = find_model(sigma, 2, false, limits.model_tables);
  if (two.model) return Verdict3::no;
  if (two.exhausted) return Verdict3::yes;
  if (classify(sigma).idempotent) {
    auto three = find_model(sigma, 3, true, limits.model_tables);
    if (three.model) return Verdict3::no;
  }
  return Verdict3::unknown;
}

Verdict3 entails_constant(const IdentitySet& sigma, const Limits& limits) {
  const auto cls = classify(sigma);
  if (!cls.linear) throw InvalidArgument("entailment check requires linear identities");
  try {
    auto eq = term_equiv_closure(sigma, limits);
    for (const auto& f : sigma.symbols)
      for (const auto& g : sigma.symbols) {
        std::vector<Term> fx(static_cast<std::size_t>(f.arity), Term::variable(0));
        std::vector<Term> gy(static_cast<std::size_t>(g.arity), Term::variable(1));
        if (eq.equivalent(Term::apply(f.name, fx), Term::apply(g.name, gy))) return Verdict3::yes;
      }
  } catch (const LimitExceeded&) {
    return Verdict3::unknown;
  }
  // Idempotent models on two or more elements refute f(x) = g(y).
  switch (entails_x_eq_y(with_idempotence(sigma), limits)) {
    case Verdict3::no: return Verdict3::no;
    case Verdict3::yes: return cls.height_one ? Verdict3::yes : Verdict3::unknown;
    case Verdict3::unknown: break;
  }
  return Verdict3::unknown;
}

Consistency consistency_check(const IdentitySet& sigma, const Limits& limits) {
  const auto cls = classify(sigma);
  if (!cls.linear) throw InvalidArgument("consistency check requires linear identities");
  Verdict3 entailed;
  if (cls.height_one && !cls.idempotent)
    entailed = entails_constant(sigma, limits);
  else
    entailed = entails_x_eq_y(cls.idempotent ? sigma : with_idempotence(sigma), limits);
  switch (entailed) {
    case Verdict3::yes: return Consistency::inconsistent;
    case Verdict3::no: return Consistency::consistent;
    case Verdict3::unknown: break;
  }
  return Consistency::unknown;
}

Interpretation extend_operations(const Interpretation& ops, const IdentitySet& sigma, Element fresh,
                                 std::vector<Element> retraction, const Limits& limits) {
  if (!classify(sigma).linear) throw InvalidArgument("extension requires linear identities");
  Element domain = 0;
  for (const auto& [name, op] : ops) {
    if (domain == 0) domain = op.domain();
    if (op.domain() != domain) throw InvalidArgument("operations have different domains");
  }
  if (ops.empty()) throw InvalidArgument("no operations to extend");
  if (fresh < domain) throw InvalidArgument("element " + std::to_string(fresh) + " is not fresh");
  if (fresh != domain) throw InvalidArgument("the fresh element must be the next domain element");
  if (retraction.empty()) {
    retraction.resize(static_cast<std::size_t>(domain) + 1);
    std::iota(retraction.begin(), retraction.end() - 1, 0);
    retraction.back() = 0;
  }
  if (retraction.size() != static_cast<std::size_t>(domain) + 1)
    throw InvalidArgument("retraction must be defined on the extended domain");
  for (Element c = 0; c < domain; ++c)
    if (retraction[static_cast<std::size_t>(c)] != c)
      throw InvalidArgument("retraction must be the identity on the old domain");
  if (retraction.back() < 0 || retraction.back() >= domain)
    throw InvalidArgument("retraction must map into the old domain");
  if (!satisfies(ops, sigma, domain)) throw InvalidArgument("operations do not satisfy the identities");
  auto eq = term_equiv_closure(sigma, limits);
  if (eq.equivalent(Term::variable(0), Term::variable(1)))
    throw InvalidArgument("identities entail x = y");
  return extend_with(ops, sigma, eq, fresh, retraction);
}

ModelSearch find_model(const IdentitySet& sigma, Element domain, bool idempotent,
                       std::uint64_t budget) {
  ModelSearch result;
  const auto d = static_cast<std::uint64_t>(domain);
  struct Cell {
    std::string symbol;
    std::size_t index;
  };
  Interpretation ops;
  std::vector<Cell> cells;
  for (const auto& f : sigma.symbols) {
    OperationTable op(domain, f.arity);
    for (std::size_t i = 0; i < op.table_size(); ++i) {
      auto args = decode_tuple(i, d, static_cast<std::size_t>(f.arity));
      bool diagonal = std::all_of(args.begin(), args.end(), [&](Element x) { return x == args[0]; });
      if (idempotent && diagonal)
        op.set_index(i, args[0]);
      else
        cells.push_back({f.name, i});
    }
    ops.emplace(f.name, std::move(op));
  }
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (space > budget / d) return result;
    space *= d;
  }
  result.exhausted = true;
  std::vector<Element> value(cells.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < cells.size(); ++i) ops.at(cells[i].symbol).set_index(cells[i].index, value[i]);
    if (satisfies(ops, sigma, domain)) {
      result.model = ops;
      return result;
    }
    std::size_t j = 0;
    while (j < value.size() && ++value[j] == domain) value[j++] = 0;
    if (j == value.size()) return result;
  }
}

}  // namespace polymeta
