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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polymeta/limits.hpp"
#include "polymeta/operation.hpp"

namespace polymeta {

/// A variable or a function symbol applied to terms.
struct Term {
  int var = -1;  // >= 0 for variables
  std::string symbol;
  std::vector<Term> args;

  static Term variable(int id) { return Term{id, {}, {}}; }
  static Term apply(std::string symbol, std::vector<Term> args) {
    return Term{-1, std::move(symbol), std::move(args)};
  }
  /// Convenience for linear terms: f(x_{v_0}, ..., x_{v_k}).
  static Term apply(std::string symbol, std::initializer_list<int> vars);

  bool is_variable() const { return var >= 0; }
  /// Nesting depth of symbols; 0 for a variable.
  int depth() const;

  friend bool operator==(const Term&, const Term&) = default;
};

struct Identity {
  Term lhs, rhs;
  friend bool operator==(const Identity&, const Identity&) = default;
};

struct FunctionSymbol {
  std::string name;
  int arity = 0;
  friend bool operator==(const FunctionSymbol&, const FunctionSymbol&) = default;
};

/// A finite set of identities over declared function symbols. Variable ids
/// 0..25 print as the letters a..z.
struct IdentitySet {
  std::vector<FunctionSymbol> symbols;
  std::vector<Identity> identities;

  /// Arity of `name`, or -1 when undeclared.
  int arity(std::string_view name) const;
  int max_arity() const;

  /// Declares `name` (or checks the existing declaration) and appends.
  void add(Identity id);
  void declare(const std::string& name, int arity);

  friend bool operator==(const IdentitySet&, const IdentitySet&) = default;
};

/// Parses the identity DSL: one identity per line (`m(x,x,y) = y`), `#`
/// starts a comment line, variables are single lowercase letters and symbol
/// arities are inferred. Throws ParseError naming `source:line`.
IdentitySet parse_identities(std::string_view text, std::string_view source = {});
std::string to_string(const Term& t);
std::string to_string(const IdentitySet& sigma);

/// {m(x,x,y) = y, m(y,x,x) = y}.
IdentitySet maltsev_identities();
/// s(a,r,e,a) = s(r,a,r,e).
IdentitySet siggers_identity();
/// Adds f(x,...,x) = x for every declared symbol that lacks it.
IdentitySet with_idempotence(IdentitySet sigma);

struct Classification {
  bool linear = false;
  bool height_one = false;
  bool idempotent = false;
  friend bool operator==(const Classification&, const Classification&) = default;
};

Classification classify(const IdentitySet& sigma);

/// Exhaustive check of every identity under every assignment. `domain` is
/// taken from the operations when 0 (and is 1 if there are none).
bool satisfies(const Interpretation& ops, const IdentitySet& sigma, Element domain = 0);

/// True iff some choice of projections on {0,1} satisfies sigma.
bool is_trivial(const IdentitySet& sigma);

/// The least equivalence on linear terms over the variables x_0..x_{N-1}
/// that contains sigma and is closed under substituting variables for
/// variables. N is the largest of 2, the maximal arity and the largest
/// number of variables in a single identity.
class TermEquivalence {
 public:
  int variables() const { return variables_; }
  std::size_t term_count() const { return parent_.size(); }
  std::size_t class_count() const;

  /// Both terms must be linear and use variables below variables().
  bool equivalent(const Term& a, const Term& b) const;
  /// Smallest variable equivalent to `t`, if any.
  std::optional<int> equivalent_variable(const Term& t) const;

  /// Term with the given dense index (see term_count()).
  Term term(std::size_t index) const;
  std::size_t index(const Term& t) const;

 private:
  friend TermEquivalence term_equiv_closure(const IdentitySet&, const Limits&);

  std::size_t find(std::size_t i) const;

  int variables_ = 0;
  std::vector<FunctionSymbol> symbols_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> parent_;  // fully compressed after construction
};

/// Throws InvalidArgument for non-linear sigma and LimitExceeded when the
/// term universe is larger than limits.closure_terms.
TermEquivalence term_equiv_closure(const IdentitySet& sigma,
                                   const Limits& limits = Limits::defaults());

enum class Verdict3 { yes, no, unknown };
enum class Consistency { consistent, inconsistent, unknown };

std::string_view to_string(Verdict3 v);
std::string_view to_string(Consistency c);

/// Does sigma entail x = y? `yes` when the closure identifies two distinct
/// variables (or an exhausted search finds no two-element model); `no` when a
/// two-element model is exhibited and verified; `unknown` when neither the
/// closure nor the model search fits the limits.
Verdict3 entails_x_eq_y(const IdentitySet& sigma, const Limits& limits = Limits::defaults());

/// Does sigma entail f(x,...,x) = g(y,...,y) for some symbols f, g? `yes`
/// when the closure derives it; `no` when sigma plus idempotence has a model
/// with two elements.
Verdict3 entails_constant(const IdentitySet& sigma, const Limits& limits = Limits::defaults());

/// Can sigma be satisfied by idempotent operations on every finite domain?
Consistency consistency_check(const IdentitySet& sigma, const Limits& limits = Limits::defaults());

/// Extends operations on C = {0..c-1} satisfying sigma to C + {fresh}, where
/// fresh must equal c. `retraction` maps C + {fresh} onto C and is the
/// identity on C; by default the fresh element goes to 0.
Interpretation extend_operations(const Interpretation& ops, const IdentitySet& sigma, Element fresh,
                                 std::vector<Element> retraction = {},
                                 const Limits& limits = Limits::defaults());

struct ModelSearch {
  std::optional<Interpretation> model;
  bool exhausted = false;  // the whole space was searched
};

/// Exhaustive enumeration of interpretations of sigma's symbols on
/// {0..domain-1}; gives up (exhausted = false) above `budget` candidates.
ModelSearch find_model(const IdentitySet& sigma, Element domain, bool idempotent,
                       std::uint64_t budget);

}  // namespace polymeta
