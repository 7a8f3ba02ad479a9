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

#include <algorithm>
#include <set>

#include "polymeta/error.hpp"
#include "polymeta/limits.hpp"
#include "polymeta/oracles.hpp"
#include "polymeta/structure.hpp"

using namespace polymeta;

namespace {

RelationalStructure edge_structure(Element n, std::initializer_list<std::pair<Element, Element>> edges) {
  RelationalStructure s(n);
  auto& r = s.add_relation("E", 2);
  for (auto [u, v] : edges) r.add({u, v});
  return s;
}

bool has_message(const std::vector<Violation>& vs, const std::string& text) {
  return std::any_of(vs.begin(), vs.end(), [&](const Violation& v) { return v.message.find(text) != std::string::npos; });
}

}  // namespace

TEST_CASE("validate reports broken invariants") {
  CHECK(validate(edge_structure(2, {{0, 1}})).empty());
  CHECK(has_message(validate(edge_structure(2, {{0, 2}})), "coordinate 2 out of domain"));
  RelationalStructure s(2);
  s.add_relation("R", 2).data = {0, 1, 1};
  CHECK(has_message(validate(s), "arity mismatch"));
  RelationalStructure dup(2);
  dup.add_relation("R", 1).data = {0};
  dup.add_relation("R", 1).data = {1};
  CHECK(has_message(validate(dup), "duplicate relation name"));
}

TEST_CASE("tuple encoding round trips") {
  for (std::uint64_t code = 0; code < 125; ++code) CHECK(encode_tuple(decode_tuple(code, 5, 3), 5) == code);
  const std::vector<Element> t{1, 0, 2};
  CHECK(encode_tuple(t, 3) == 1 + 0 * 3 + 2 * 9);
}

TEST_CASE("square of the 2-cycle") {
  const auto a = edge_structure(2, {{0, 1}, {1, 0}});
  const auto p = power(a, 2);
  CHECK(p.size == 4);
  // (x0, x1) is encoded as x0 + 2 x1.
  auto code = [](Element x0, Element x1) { return x0 + 2 * x1; };
  std::set<std::pair<Element, Element>> expected{{code(0, 0), code(1, 1)},
                                                 {code(0, 1), code(1, 0)},
                                                 {code(1, 0), code(0, 1)},
                                                 {code(1, 1), code(0, 0)}};
  std::set<std::pair<Element, Element>> got;
  const Relation& r = p.relations[0];
  for (size_t i = 0; i < r.size(); ++i) got.emplace(r.tuple(i)[0], r.tuple(i)[1]);
  CHECK(got == expected);
}

TEST_CASE("power edge cases") {
  oracle::Rng rng(1);
  const auto a = oracle::random_structure(rng, 3, 2, 2, 0.5);
  auto p1 = power(a, 1);
  auto copy = a;
  for (auto& r : copy.relations) r.normalize();
  for (auto& r : p1.relations) r.normalize();
  CHECK(p1 == copy);
  RelationalStructure one(1);
  one.add_relation("R", 2).add({0, 0});
  const auto p3 = power(one, 3);
  CHECK(p3.size == 1);
  CHECK(p3.relations[0].size() == 1);
  Limits tight;
  tight.power_domain = 8;
  CHECK_THROWS_AS(power(a, 2, tight), LimitExceeded);
}

TEST_CASE("homomorphism search on small digraphs") {
  const auto edge = edge_structure(2, {{0, 1}});
  const auto two_cycle = edge_structure(2, {{0, 1}, {1, 0}});
  const auto three_cycle = edge_structure(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto h = hom_search(edge, two_cycle);
  REQUIRE(h);
  CHECK(is_homomorphism(*h, edge, two_cycle));
  CHECK_FALSE(hom_search(three_cycle, two_cycle));
  CHECK_FALSE(oracle::hom_exists(three_cycle, two_cycle));
  PartialMap seed(3);
  seed[1] = 1;
  const auto id = hom_search(three_cycle, three_cycle, seed);
  REQUIRE(id);
  CHECK(id->map == std::vector<Element>{0, 1, 2});
}

TEST_CASE("homomorphism checks") {
  const auto s = edge_structure(3, {{0, 1}, {1, 2}});
  CHECK(is_homomorphism(Homomorphism{3, 3, {0, 1, 2}}, s, s));
  CHECK_FALSE(is_homomorphism(Homomorphism{3, 3, {2, 2, 2}}, s, s));
}

TEST_CASE("hom_search agrees with exhaustive enumeration") {
  oracle::Rng rng(7);
  std::uniform_int_distribution<Element> size(1, 4);
  for (int i = 0; i < 300; ++i) {
    const auto b = oracle::random_structure(rng, size(rng), 2, 3, 0.4);
    RelationalStructure a(size(rng));
    std::bernoulli_distribution keep(0.2);
    for (const auto& r : b.relations) {
      auto& ra = a.add_relation(r.name, r.arity);
      std::uint64_t total = 1;
      for (int k = 0; k < r.arity; ++k) total *= static_cast<std::uint64_t>(a.size);
      for (std::uint64_t c = 0; c < total; ++c)
        if (keep(rng)) ra.add(decode_tuple(c, static_cast<std::uint64_t>(a.size), static_cast<size_t>(r.arity)));
    }
    const auto h = hom_search(a, b);
    CHECK(h.has_value() == oracle::hom_exists(a, b));
    if (h) CHECK(is_homomorphism(*h, a, b));
  }
}

TEST_CASE("compose") {
  const Homomorphism h{3, 2, {0, 1, 1}};
  const Homomorphism g{2, 4, {3, 2}};
  CHECK(compose(g, h).map == std::vector<Element>{3, 2, 2});
}

TEST_CASE("singleton expansion") {
  const auto b = edge_structure(2, {{0, 1}});
  const auto c = add_singleton_relations(b);
  CHECK(c.relations.size() == 4);
  RelationalStructure point(1);
  const auto cp = add_singleton_relations(point);
  REQUIRE(cp.find(kEqualityRelation));
  CHECK(cp.find(kEqualityRelation)->data == std::vector<Element>{0, 0});
  REQUIRE(cp.find(singleton_relation_name(0)));
  CHECK(cp.find(singleton_relation_name(0))->data == std::vector<Element>{0});
}

TEST_CASE("limits overrides") {
  Limits l;
  l.apply("power_domain=5, group_search=3");
  CHECK(l.power_domain == 5);
  CHECK(l.group_search == 3);
  CHECK_THROWS_AS(l.apply("nonsense=1"), InvalidArgument);
  CHECK_THROWS_AS(l.apply("power_domain=abc"), InvalidArgument);
  CHECK_THROWS_AS(l.apply("power_domain"), InvalidArgument);
}
