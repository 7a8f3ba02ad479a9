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
#include "polymeta/io.hpp"
#include "polymeta/oracles.hpp"

using namespace polymeta;

namespace {

std::string where_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e.where();
  }
  return "no error";
}

}  // namespace

TEST_CASE("structure JSON round trip") {
  oracle::Rng rng(6);
  for (int i = 0; i < 30; ++i) {
    auto s = oracle::random_structure(rng, 1 + i % 4, 1 + i % 3, 3, 0.4);
    CHECK(parse_structure(to_json(s)) == s);
  }
  const auto s = parse_structure(R"({"domain": 2, "relations": [{"name": "R", "arity": 2, "tuples": [[0, 1]]}]})");
  CHECK(s.size == 2);
  CHECK(s.relations[0].data == std::vector<Element>{0, 1});
}

TEST_CASE("structure errors name file and line or path") {
  CHECK(where_of([] { parse_structure("{\n\"domain\": 2,\n\"relations\": [}\n", "s.json"); }) == "s.json:3");
  CHECK(where_of([] { parse_structure(R"({"domain": 2, "relations": [{"name": "R", "arity": 2, "tuples": [[0, 5]]}]})", "s.json"); }) ==
        "s.json");
  CHECK(where_of([] { parse_structure(R"({"relations": []})", "s.json"); }) == "s.json");
}

TEST_CASE("group JSON round trip") {
  for (const auto& g : {cyclic(5), dihedral(8), dicyclic_4p(5)}) CHECK(parse_group(to_json(g)) == g);
  CHECK_THROWS_AS(parse_group(R"({"order": 2, "mul": [[0, 1], [1, 1]]})"), ParseError);
}

TEST_CASE("graph text round trip") {
  const Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(parse_graph(to_dimacs(g)) == g);
  CHECK(parse_graph("c comment\np edge 3 1\nc another\ne 1 3\n") == Graph::from_edges(3, {{0, 2}}));
  CHECK(where_of([] { parse_graph("p edge 3 2\ne 1 2\ne 2 9\n", "g.graph"); }) == "g.graph:3");
  CHECK(where_of([] { parse_graph("p edge 3 2\ne 1 2\n", "g.graph"); }) == "g.graph:2");
  CHECK(where_of([] { parse_graph("", "g.graph"); }) == "g.graph:1");
}

TEST_CASE("NAE text round trip") {
  const NaeInstance phi{4, {{0, 1, 2}, {3, 3, 1}}};
  CHECK(parse_nae(to_text(phi)) == phi);
  CHECK(parse_nae("# x\nnae 3 1\n1 2 3\n") == NaeInstance{3, {{0, 1, 2}}});
  CHECK(where_of([] { parse_nae("nae 2 1\n1 2 3\n", "f.nae"); }) == "f.nae:2");
}

TEST_CASE("verdict JSON round trip") {
  MetaVerdict no;
  CHECK(parse_verdict(to_json(no)).answer == false);
  MetaVerdict yes;
  yes.answer = true;
  yes.witness = Interpretation{{"m", heap_from_group(cyclic(3))}};
  yes.group = cyclic(3);
  const auto back = parse_verdict(to_json(yes));
  CHECK(back.answer);
  CHECK(back.witness == yes.witness);
  CHECK(back.group == yes.group);
  CHECK_FALSE(back.promise_violation);
}

TEST_CASE("decomposition JSON") {
  const Decomposition d{{{0, 1}}, {0, 0, 1}};
  CHECK(to_json(d) == "{\"matching\":[[0,1]],\"side\":[0,0,1]}\n");
}

TEST_CASE("missing files") {
  CHECK_THROWS_AS(read_file("/nonexistent/file.json"), ParseError);
}
