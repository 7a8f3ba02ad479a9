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

#include <doctest.h>

#include "polymeta/error.hpp"
#include "polymeta/identities.hpp"
#include "polymeta/oracles.hpp"

using namespace polymeta;

namespace {

OperationTable xor3() {
  return OperationTable::from_function(2, 3, [](std::span<const Element> a) { return a[0] ^ a[1] ^ a[2]; });
}

}  // namespace

TEST_CASE("parse and print identities") {
  const auto sigma = parse_identities("# Maltsev\nm(x,x,y) = y\nm(y,x,x) = y\n");
  CHECK(sigma == maltsev_identities());
  CHECK(parse_identities(to_string(sigma)) == sigma);
  CHECK(sigma.arity("m") == 3);
  CHECK(sigma.arity("f") == -1);
  try {
    parse_identities("f(x) = x\nf(x,y) = x\n", "ids.txt");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.where() == "ids.txt:2");
  }
  CHECK_THROWS_AS(parse_identities("m(x,x = y\n", "bad"), ParseError);
}

TEST_CASE("classification") {
  const auto maltsev = classify(maltsev_identities());
  CHECK(maltsev.linear);
  CHECK_FALSE(maltsev.height_one);
  CHECK_FALSE(maltsev.idempotent);
  const auto siggers = classify(siggers_identity());
  CHECK(siggers.linear);
  CHECK(siggers.height_one);
  const auto idem = classify(parse_identities("f(x,x) = x"));
  CHECK(idem.linear);
  CHECK(idem.idempotent);
  CHECK_FALSE(classify(parse_identities("f(f(x,y),z) = f(x,f(y,z))")).linear);
}

TEST_CASE("satisfies") {
  CHECK(satisfies({{"m", xor3()}}, maltsev_identities()));
  CHECK_FALSE(satisfies({{"m", OperationTable::projection(2, 3, 0)}}, maltsev_identities()));
  CHECK(satisfies({{"m", OperationTable::projection(2, 3, 0)}}, IdentitySet{}));
}

TEST_CASE("triviality") {
  CHECK_FALSE(is_trivial(parse_identities("f(x,y) = f(y,x)")));
  CHECK_FALSE(is_trivial(maltsev_identities()));
  CHECK(is_trivial(parse_identities("f(x,y) = x")));
}

TEST_CASE("term closure") {
  const auto eq = term_equiv_closure(maltsev_identities());
  const int x = 0, y = 1;
  CHECK(eq.equivalent_variable(Term::apply("m", {x, x, y})) == y);
  CHECK(eq.equivalent_variable(Term::apply("m", {y, x, x})) == y);
  const auto empty = term_equiv_closure(parse_identities("f(x,y) = f(x,y)"));
  CHECK(empty.class_count() == empty.term_count());
  const auto comm = term_equiv_closure(parse_identities("f(x,y) = f(y,x)"));
  CHECK(comm.equivalent(Term::apply("f", {0, 1}), Term::apply("f", {1, 0})));
  CHECK_FALSE(comm.equivalent(Term::apply("f", {0, 0}), Term::apply("f", {0, 1})));
  CHECK_FALSE(comm.equivalent_variable(Term::apply("f", {0, 0})));
  Limits tiny;
  tiny.closure_terms = 3;
  CHECK_THROWS_AS(term_equiv_closure(siggers_identity(), tiny), LimitExceeded);
}

TEST_CASE("entailment and consistency") {
  CHECK(entails_x_eq_y(parse_identities("f(x) = x\nf(x) = y")) == Verdict3::yes);
  CHECK(entails_x_eq_y(maltsev_identities()) == Verdict3::no);
  CHECK(entails_x_eq_y(IdentitySet{}) == Verdict3::no);
  CHECK(consistency_check(siggers_identity()) == Consistency::consistent);
  CHECK(consistency_check(parse_identities("f(x,y) = x\nf(x,y) = y")) == Consistency::inconsistent);
  CHECK(consistency_check(with_idempotence(maltsev_identities())) == Consistency::consistent);
  CHECK(entails_constant(siggers_identity()) == Verdict3::no);
  CHECK_THROWS_AS(entails_x_eq_y(parse_identities("f(f(x)) = x")), InvalidArgument);
}

TEST_CASE("model search") {
  const auto found = find_model(maltsev_identities(), 2, true, 1000);
  REQUIRE(found.model);
  CHECK(satisfies(*found.model, maltsev_identities()));
  const auto none = find_model(parse_identities("f(x,y) = x\nf(x,y) = y"), 2, false, 1000);
  CHECK_FALSE(none.model);
  CHECK(none.exhausted);
}

TEST_CASE("extending operations by a fresh element") {
  const auto sigma = maltsev_identities();
  const Interpretation trivial{{"m", OperationTable(1, 3, {0})}};
  const auto two = extend_operations(trivial, sigma, 1, {0, 0});
  const auto& m2 = two.at("m");
  CHECK(oracle::maltsev(m2));
  CHECK(m2({0, 1, 0}) == 0);

  const auto three = extend_operations({{"m", xor3()}}, sigma, 2, {0, 1, 0});
  const auto& m3 = three.at("m");
  CHECK(oracle::maltsev(m3));
  for (Element y = 0; y < 3; ++y) CHECK(m3({2, 2, y}) == y);
  CHECK(m3({2, 0, 1}) == 1);
  CHECK(satisfies(three, sigma));

  CHECK_THROWS_AS(extend_operations({{"m", xor3()}}, sigma, 1), InvalidArgument);
  CHECK_THROWS_AS(extend_operations({{"m", OperationTable::projection(2, 3, 0)}}, sigma, 2), InvalidArgument);
}
