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
#include <numeric>
#include <set>

#include "polymeta/error.hpp"
#include "polymeta/group.hpp"
#include "polymeta/meta.hpp"
#include "polymeta/oracles.hpp"

using namespace polymeta;

namespace {

GroupTable inversion_product(Element n) {
  GroupAction act(2);
  for (Element x = 0; x < n; ++x) {
    act[0].push_back(x);
    act[1].push_back((n - x) % n);
  }
  return semidirect(cyclic(n), cyclic(2), act);
}

Relation unary(std::initializer_list<Element> xs) {
  Relation r{"R", 1, {}};
  for (Element x : xs) r.add({x});
  return r;
}

}  // namespace

TEST_CASE("constructions") {
  const auto z4 = cyclic(4);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) CHECK(z4.mul(a, b) == (a + b) % 4);
  CHECK(is_isomorphic(inversion_product(5), dihedral(10)));
  const auto klein = direct_product(cyclic(2), cyclic(2));
  for (Element a = 0; a < 4; ++a) CHECK(klein.mul(a, a) == klein.identity());
  CHECK(klein.is_associative());
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(GroupTable(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}), InvalidArgument);
}

TEST_CASE("semidirect rejects non-automorphisms") {
  GroupAction bad{{0, 1, 2}, {0, 0, 1}};
  CHECK_THROWS_AS(semidirect(cyclic(3), cyclic(2), bad), InvalidArgument);
}

TEST_CASE("dihedral groups") {
  const auto d8 = dihedral(8);
  const Element s = dihedral_element(8, 1, 0);
  const Element d = dihedral_element(8, 0, 1);
  CHECK(d8.element_order(d) == 4);
  CHECK(d8.mul(d8.mul(s, d), d8.mul(s, d)) == d8.identity());
  // s d s = d^-1
  CHECK(d8.mul(d8.mul(s, d), s) == d8.inv(d));
  CHECK(is_isomorphic(dihedral(2), cyclic(2)));
  CHECK(is_isomorphic(dihedral(4), direct_product(cyclic(2), cyclic(2))));
  CHECK_THROWS_AS(dihedral(7), InvalidArgument);
}

TEST_CASE("order 4p families") {
  const auto dic = dicyclic_4p(5);
  CHECK(order_census(dic)[2] == 1);
  CHECK(is_isomorphic(cp_c4_faithful(5, 2), cp_c4_faithful(5, 3)));
  CHECK_THROWS_AS(dicyclic_4p(4), InvalidArgument);
  CHECK_THROWS_AS(cp_c4_faithful(7), InvalidArgument);
  CHECK(classify_order_4p(dihedral(20)) == "D_4p");
  CHECK(classify_order_4p(direct_product(cyclic(4), cyclic(5))) == "C_4p");
  CHECK_FALSE(is_isomorphic(dihedral(20), dicyclic_4p(5)));
  for (Element p : {5, 7, 11, 13}) {
    const auto candidates = order_4p_candidates(p);
    CHECK(candidates.size() == (p % 4 == 1 ? 5u : 4u));
    for (size_t i = 0; i < candidates.size(); ++i) {
      CHECK(candidates[i].second.order() == 4 * p);
      CHECK(classify_order_4p(candidates[i].second) == candidates[i].first);
      for (size_t j = i + 1; j < candidates.size(); ++j)
        CHECK_FALSE(is_isomorphic(candidates[i].second, candidates[j].second));
    }
  }
}

TEST_CASE("subgroups") {
  CHECK(subgroups_of_order(dihedral(8), 2).size() == 5);
  CHECK(subgroups_of_order(cyclic(7), 2).empty());
  CHECK(all_subgroups(cyclic(6)).size() == 4);
  const std::vector<GroupTable> groups{cyclic(8), dihedral(12), direct_product(cyclic(2), cyclic(6)),
                                       direct_product(dihedral(6), cyclic(2)), dicyclic_4p(5)};
  for (const auto& g : groups) {
    std::set<std::vector<std::uint64_t>> brute;
    for (auto& s : oracle::subgroups(oracle::PowerGroup{&g, 1})) brute.insert(s);
    std::set<std::vector<std::uint64_t>> lib;
    for (const auto& s : all_subgroups(g)) lib.insert(std::vector<std::uint64_t>(s.begin(), s.end()));
    CHECK(lib == brute);
  }
  Limits small;
  small.subgroup_order = 10;
  CHECK_THROWS_AS(all_subgroups(dihedral(12), small), LimitExceeded);
}

TEST_CASE("is_coset on small cases") {
  const auto z6 = cyclic(6);
  CHECK(is_coset(unary({2, 5}), z6));
  CHECK_FALSE(is_coset(unary({0, 1, 3}), z6));
  CHECK(is_coset(unary({z6.identity()}), z6));
  CHECK(is_coset(unary({1}), dihedral(8)));
  CHECK_THROWS_AS(is_coset(Relation{"R", 1, {}}, z6), InvalidArgument);
}

TEST_CASE("is_coset agrees with the coset list") {
  oracle::Rng rng(11);
  const std::vector<GroupTable> groups{cyclic(4), direct_product(cyclic(2), cyclic(2)), dihedral(6)};
  for (const auto& g : groups)
    for (int k : {1, 2}) {
      const oracle::PowerGroup pg{&g, k};
      const auto cosets = oracle::all_cosets(pg);
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> subset;
        for (std::uint64_t x = 0; x < pg.size(); ++x)
          if (std::bernoulli_distribution(0.4)(rng)) subset.push_back(x);
        if (subset.empty()) continue;
        CHECK(is_coset(oracle::relation_of(pg, subset), g) == (cosets.count(subset) > 0));
      }
    }
}

TEST_CASE("coset graphs and the closed form") {
  CHECK(coset_graph(cyclic(5)).edges.empty());
  CHECK(coset_graph(dihedral(20)).edges.size() == 110);
  CHECK(cosets_of_order2(dihedral(8)).size() == 20);
  CHECK(cosets_of_order2(dihedral(4)).size() == 6);
  CHECK(cosets_of_order2(dihedral(12)).size() == 42);
  CHECK_THROWS_AS(cosets_of_order2(dihedral(10)), InvalidArgument);
  CHECK_THROWS_AS(cosets_of_order2(cyclic(8)), InvalidArgument);
}

TEST_CASE("group enumeration") {
  const int known[] = {1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5};
  for (Element n = 1; n <= 12; ++n) {
    const auto groups = enumerate_groups_on_set(n);
    CHECK(static_cast<int>(groups.size()) == known[n - 1]);
    for (const auto& g : groups) {
      CHECK(g.identity() == 0);
      CHECK(g.is_associative());
    }
  }
  int seen = 0;
  enumerate_groups_on_set(8, [&](const GroupTable&) { return ++seen < 2; });
  CHECK(seen == 2);
  Limits small;
  small.enumerate_order = 6;
  CHECK_THROWS_AS(enumerate_groups_on_set(8, small), LimitExceeded);
}

TEST_CASE("isomorphisms survive relabelling") {
  oracle::Rng rng(3);
  for (const auto& g : {dihedral(12), dicyclic_4p(5), direct_product(cyclic(2), cyclic(4))}) {
    std::vector<Element> perm(static_cast<size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto h = relabel(g, perm);
    const auto iso = find_isomorphism(g, h);
    REQUIRE(iso);
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b)
        CHECK((*iso)[static_cast<size_t>(g.mul(a, b))] == h.mul((*iso)[static_cast<size_t>(a)], (*iso)[static_cast<size_t>(b)]));
  }
  CHECK_FALSE(find_isomorphism(cyclic(4), direct_product(cyclic(2), cyclic(2))));
}

TEST_CASE("heaps from groups") {
  const auto h2 = heap_from_group(cyclic(2));
  for (Element x = 0; x < 2; ++x)
    for (Element y = 0; y < 2; ++y)
      for (Element z = 0; z < 2; ++z) CHECK(h2({x, y, z}) == (x ^ y ^ z));
  CHECK(heap_from_group(cyclic(3))({1, 2, 1}) == 0);
  const auto g = group_from_heap(h2, 1);
  CHECK(g.identity() == 1);
  CHECK(is_isomorphic(g, cyclic(2)));
  CHECK_THROWS_AS(group_from_heap(OperationTable::projection(2, 3, 0), 0), InvalidArgument);
  for (const auto& grp : {dihedral(10), dicyclic_4p(5), cyclic(7)}) {
    const auto heap = heap_from_group(grp);
    for (Element e = 0; e < grp.order(); ++e) CHECK(heap_from_group(group_from_heap(heap, e)) == heap);
  }
}
