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

#include <set>

#include "polymeta/error.hpp"
#include "polymeta/group.hpp"
#include "polymeta/meta.hpp"
#include "polymeta/oracles.hpp"
#include "polymeta/reductions.hpp"

using namespace polymeta;

TEST_CASE("NAE brute force") {
  CHECK(nae_brute(NaeInstance{3, {{0, 1, 2}}}));
  CHECK_FALSE(nae_brute(NaeInstance{1, {{0, 0, 0}}}));
  CHECK(nae_brute(NaeInstance{2, {}}));
  CHECK_THROWS_AS(validate(NaeInstance{2, {{0, 1, 2}}}), InvalidArgument);
  Limits small;
  small.nae_variables = 3;
  CHECK_THROWS_AS(nae_brute(NaeInstance{4, {}}, small), LimitExceeded);
  oracle::Rng rng(2);
  for (int i = 0; i < 300; ++i) {
    NaeInstance phi{4, {}};
    std::uniform_int_distribution<int> var(0, 3);
    for (int c = 0; c < 1 + i % 7; ++c) phi.clauses.push_back({var(rng), var(rng), var(rng)});
    CHECK(nae_brute(phi) == oracle::nae_satisfiable(phi));
  }
}

TEST_CASE("NAE graph shape") {
  const NaeInstance one{3, {{0, 1, 2}}};
  CHECK(duplication_factor(one) == 3);
  const Graph g = nae3sat_to_graph(one);
  CHECK(g.vertices == 15);
  CHECK(g.edges.size() == 30);
  CHECK(nae3sat_to_graph(NaeInstance{0, {}}).vertices == 0);
  CHECK(duplication_factor(NaeInstance{2, {{0, 0, 1}, {0, 1, 1}}}) == 1);
}

TEST_CASE("decomposition examples") {
  const auto bip = decompose_matching_bipartite(complete_bipartite(3, 4));
  REQUIRE(bip);
  CHECK(bip->matching.empty());
  CHECK(validate(*bip, complete_bipartite(3, 4)).empty());
  CHECK_FALSE(decompose_matching_bipartite(complete_graph(5)));
  CHECK_FALSE(oracle::decomposable(complete_graph(5)));
  const Graph apex = degree_four_gadget();
  const auto d = decompose_matching_bipartite(apex);
  REQUIRE(d);
  CHECK(validate(*d, apex).empty());
  const Decomposition stated{{{3, 4}, {2, 5}}, {0, 1, 0, 1, 1, 0}};
  CHECK(validate(stated, apex).empty());
  const Decomposition broken{{{0, 1}, {1, 2}}, {0, 0, 0, 1, 1, 1}};
  CHECK_FALSE(validate(broken, apex).empty());
  Limits small;
  small.decompose_vertices = 4;
  CHECK_THROWS_AS(decompose_matching_bipartite(complete_graph(5), small), LimitExceeded);
}

TEST_CASE("decomposition agrees with brute force") {
  oracle::Rng rng(13);
  std::uniform_int_distribution<int> n(1, 9);
  for (int i = 0; i < 300; ++i) {
    const int v = n(rng);
    std::bernoulli_distribution keep(0.2 + 0.6 * (i % 5) / 4.0);
    std::vector<Edge> edges;
    for (int b = 1; b < v; ++b)
      for (int a = 0; a < b; ++a)
        if (keep(rng)) edges.emplace_back(a, b);
    const Graph g = Graph::from_edges(v, edges);
    const auto d = decompose_matching_bipartite(g);
    CHECK(d.has_value() == oracle::decomposable(g));
    if (d) CHECK(validate(*d, g).empty());
  }
}

TEST_CASE("gadget and primes") {
  const Graph gadget = degree_four_gadget();
  CHECK_FALSE(is_bipartite(gadget));
  CHECK(gadget.degrees()[5] == 4);
  CHECK(needs_gadget(complete_bipartite(4, 4)));
  CHECK(needs_gadget(cycle_graph(5)));
  CHECK_FALSE(needs_gadget(complete_graph(5)));
  CHECK(smallest_prime_at_least(5) == 5);
  CHECK(smallest_prime_at_least(6) == 7);
  CHECK(smallest_prime_at_least(24) == 29);
}

TEST_CASE("graph to structure") {
  const auto k5 = graph_to_structure(complete_graph(5));
  CHECK(k5.p == 5);
  CHECK(k5.structure.size == 20);
  CHECK(k5.structure.relations.size() == 10);
  for (const auto& r : k5.structure.relations) {
    CHECK(r.arity == 1);
    CHECK(r.size() == 2);
  }
  CHECK(k5.structure.find(edge_relation_name(0, 1)));

  std::vector<Edge> edges;
  for (int v = 1; v < 11; ++v) edges.emplace_back(0, v);
  edges.emplace_back(1, 2);
  edges.emplace_back(2, 3);
  edges.emplace_back(3, 4);
  edges.emplace_back(1, 3);
  const auto eleven = graph_to_structure(Graph::from_edges(11, edges));
  CHECK_FALSE(eleven.gadget_added);
  CHECK(eleven.p == 7);

  const auto c4 = graph_to_structure(cycle_graph(4));
  CHECK(c4.gadget_added);
  CHECK(c4.graph.vertices == 10);
}

TEST_CASE("embedding decompositions into the dihedral group") {
  const Element p = 5;
  const GroupTable d = dihedral(4 * p);
  const Decomposition single{{}, {0, 1}};
  const auto f = embed_decomposition(single, p);
  CHECK(f[0] == dihedral_element(4 * p, 0, 0));
  CHECK(f[1] == dihedral_element(4 * p, 1, 0));
  const Decomposition pair{{{0, 1}}, {0, 0}};
  const auto g = embed_decomposition(pair, p);
  CHECK(std::set<Element>{g[0], g[1]} == std::set<Element>{dihedral_element(4 * p, 0, 0), dihedral_element(4 * p, 0, p)});

  const Graph apex = degree_four_gadget();
  const auto dec = decompose_matching_bipartite(apex);
  REQUIRE(dec);
  const auto image = embed_decomposition(*dec, p);
  CHECK(std::set<Element>(image.begin(), image.end()).size() == image.size());
  for (auto [u, v] : apex.edges) {
    Relation r{"E", 1, {}};
    r.add({image[static_cast<size_t>(u)]});
    r.add({image[static_cast<size_t>(v)]});
    CHECK(is_coset(r, d));
  }
  CHECK_THROWS_AS(embed_decomposition(Decomposition{{}, std::vector<int>(11, 0)}, p), InvalidArgument);
}

TEST_CASE("fresh element") {
  RelationalStructure a(4);
  a.add_relation("R", 2).data = {0, 1};
  const auto b = add_fresh_element(a);
  CHECK(b.size == 5);
  REQUIRE(b.find("U"));
  CHECK(b.find("U")->size() == 4);
  CHECK_FALSE(has_coset_polymorphism(b).answer);

  RelationalStructure taken(3);
  taken.add_relation("U", 1).data = {0};
  taken.add_relation("R", 2).data = {0, 1, 1, 2};
  const auto c = add_fresh_element(taken);
  CHECK(c.relations.size() == 3);
  CHECK(c.find("U")->size() == 1);
  CHECK_FALSE(has_coset_polymorphism(c).answer);

  RelationalStructure one(1);
  one.add_relation("R", 1).data = {0};
  CHECK(has_coset_polymorphism(add_fresh_element(one)).answer);
}
