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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "polymeta/graph.hpp"
#include "polymeta/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "polymeta");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = polymeta::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("polymeta_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("coset check through the graph reduction") {
  const auto k5 = write_temp("k5.graph", polymeta::to_dimacs(polymeta::complete_graph(5)));
  const auto meta = run({"reduce", "graph2meta", k5});
  REQUIRE(meta.code == 0);
  const auto k5meta = write_temp("k5meta.json", meta.out);
  const auto r = run({"check-coset", k5meta});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "NO");

  const auto c5 = write_temp("c5.graph", polymeta::to_dimacs(polymeta::cycle_graph(5)));
  const auto c5meta = write_temp("c5meta.json", run({"reduce", "graph2meta", c5}).out);
  const auto yes = run({"check-coset", c5meta, "--witness"});
  CHECK(first_line(yes.out) == "YES");
  const auto verdict = polymeta::parse_verdict(yes.out.substr(yes.out.find('\n') + 1));
  CHECK(verdict.answer);
  CHECK(verdict.witness);
  const auto json = run({"check-coset", c5meta, "--json"});
  CHECK(polymeta::parse_verdict(json.out).answer);
}

TEST_CASE("group command") {
  const auto r = run({"group", "dihedral", "20", "--coset-graph"});
  CHECK(r.code == 0);
  CHECK(polymeta::parse_graph(r.out).edges.size() == 110);
  const auto table = run({"group", "cyclic", "4"});
  CHECK(polymeta::parse_group(table.out) == polymeta::cyclic(4));
  const auto subs = run({"group", "dihedral", "8", "--subgroups", "2"});
  CHECK(std::count(subs.out.begin(), subs.out.end(), '[') == 6);
  CHECK(run({"group", "klein", "4"}).code == 2);
}

TEST_CASE("decompose command") {
  const auto bip = write_temp("bip.graph", "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
  const auto r = run({"decompose", bip, "--witness"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "YES");
  CHECK(r.out.find("\"matching\":[]") != std::string::npos);
  const auto k5 = write_temp("k5b.graph", polymeta::to_dimacs(polymeta::complete_graph(5)));
  CHECK(first_line(run({"decompose", k5}).out) == "NO");
}

TEST_CASE("decision commands on small templates") {
  const auto ne = write_temp("ne.json", R"({"domain": 2, "relations": [{"name": "R", "arity": 2, "tuples": [[0, 1], [1, 0]]}]})");
  const auto no = write_temp("no.json", R"({"domain": 2, "relations": [{"name": "R", "arity": 2, "tuples": [[0, 0], [0, 1], [1, 0]]}]})");
  const auto tri = write_temp("tri.json", R"({"domain": 3, "relations": [{"name": "R", "arity": 2, "tuples": [[0, 1], [1, 2], [2, 0]]}]})");
  const auto maltsev = write_temp("maltsev.txt", "m(x,x,y) = y\nm(y,x,x) = y\n");
  CHECK(first_line(run({"check-poly", ne, maltsev}).out) == "YES");
  CHECK(first_line(run({"check-poly", no, maltsev}).out) == "NO");
  CHECK(first_line(run({"pmeta-abheap", ne}).out) == "YES");
  const auto outside = run({"pmeta-abheap", no});
  CHECK(first_line(outside.out) == "NO");
  CHECK(outside.err.find("promise") != std::string::npos);
  CHECK(first_line(run({"solve", ne, ne}).out) == "YES");
  CHECK(first_line(run({"solve", tri, ne}).out) == "NO");
  CHECK(first_line(run({"aip", tri, ne}).out) == "NO");
  const auto sol = run({"solve", ne, ne, "--witness"});
  CHECK(sol.out.find("\"map\"") != std::string::npos);
}

TEST_CASE("reduce nae2graph") {
  const auto nae = write_temp("one.nae", "nae 3 1\n1 2 3\n");
  const auto r = run({"reduce", "nae2graph", nae});
  CHECK(r.code == 0);
  const auto g = polymeta::parse_graph(r.out);
  CHECK(g.vertices == 15);
  CHECK(g.edges.size() == 30);
}

TEST_CASE("input errors exit with 2 and a located diagnostic") {
  const auto bad = write_temp("bad.graph", "p edge 3 2\ne 1 2\ne 2 x\n");
  const auto r = run({"decompose", bad});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find(bad + ":3:") == 0);
  const auto json = write_temp("bad.json", "{\n\"domain\": 2,\n,\n}");
  const auto j = run({"check-coset", json});
  CHECK(j.code == 2);
  CHECK(j.err.find(json + ":3:") == 0);
  CHECK(run({"check-coset"}).code == 2);
  CHECK(run({"check-coset", json, "--frobnicate"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"decompose", "/nonexistent.graph"}).code == 2);
}

TEST_CASE("limits produce exit code 3") {
  const auto big = write_temp("big.json", R"({"domain": 13, "relations": [{"name": "R", "arity": 1, "tuples": [[0]]}]})");
  CHECK(run({"check-coset", big}).code == 3);
}

TEST_CASE("selftest subset") {
  const auto r = run({"selftest", "1", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS [1]") == 0);
  CHECK(r.out.find("PASS [2]") != std::string::npos);
}
