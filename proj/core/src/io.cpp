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

#include "polymeta/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "polymeta/error.hpp"

namespace polymeta {
namespace {

using nlohmann::json;
using std::size_t;

std::string at_line(std::string_view source, size_t line) {
  return std::string(source.empty() ? "<input>" : source) + ":" + std::to_string(line);
}

std::string at_source(std::string_view source) { return std::string(source.empty() ? "<input>" : source); }

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1;
    const size_t end = std::min(static_cast<size_t>(e.byte), text.size());
    for (size_t i = 0; i + 1 < end; ++i)
      if (text[i] == '\n') ++line;
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(at_line(source, line), what);
  }
}

// Semantic problems in JSON documents carry a JSON path instead of a line.
[[noreturn]] void fail(std::string_view source, const std::string& path, const std::string& what) {
  throw ParseError(at_source(source), path + ": " + what);
}

long long get_int(const json& j, std::string_view source, const std::string& path) {
  if (!j.is_number_integer()) fail(source, path, "expected an integer");
  return j.get<long long>();
}

const json& member(const json& j, const char* key, std::string_view source, const std::string& path) {
  if (!j.is_object()) fail(source, path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(source, path, std::string("missing \"") + key + "\"");
  return *it;
}

json table_json(const OperationTable& op) {
  return json{{"domain", op.domain()}, {"arity", op.arity()}, {"table", op.values()}};
}

json group_json(const GroupTable& g) {
  json rows = json::array();
  for (Element a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (Element b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
    rows.push_back(std::move(row));
  }
  return json{{"order", g.order()}, {"mul", std::move(rows)}};
}

GroupTable group_from_json(const json& j, std::string_view source, const std::string& path) {
  const long long n = get_int(member(j, "order", source, path), source, path + ".order");
  if (n < 1 || n > 4096) fail(source, path + ".order", "order out of range");
  const json& mul = member(j, "mul", source, path);
  if (!mul.is_array() || mul.size() != static_cast<size_t>(n)) fail(source, path + ".mul", "expected " + std::to_string(n) + " rows");
  std::vector<Element> table;
  for (size_t a = 0; a < mul.size(); ++a) {
    const std::string rp = path + ".mul[" + std::to_string(a) + "]";
    if (!mul[a].is_array() || mul[a].size() != static_cast<size_t>(n)) fail(source, rp, "expected " + std::to_string(n) + " entries");
    for (size_t b = 0; b < mul[a].size(); ++b) table.push_back(static_cast<Element>(get_int(mul[a][b], source, rp)));
  }
  try {
    return GroupTable(static_cast<Element>(n), std::move(table));
  } catch (const InvalidArgument& e) {
    fail(source, path, e.what());
  }
}

// Splits into lines, keeping 1-based numbers; skips blank lines and those
// starting with `comment`.
std::vector<std::pair<size_t, std::string>> content_lines(std::string_view text, char comment) {
  std::vector<std::pair<size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == comment) continue;
    out.emplace_back(n, line.substr(first));
  }
  return out;
}

std::vector<long long> read_ints(std::istringstream& in, size_t count, std::string_view source, size_t line) {
  std::vector<long long> out;
  for (size_t i = 0; i < count; ++i) {
    long long v;
    if (!(in >> v)) throw ParseError(at_line(source, line), "expected " + std::to_string(count) + " integers");
    out.push_back(v);
  }
  std::string extra;
  if (in >> extra) throw ParseError(at_line(source, line), "unexpected trailing '" + extra + "'");
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RelationalStructure parse_structure(std::string_view text, std::string_view source) {
  const json j = parse_json(text, source);
  const long long n = get_int(member(j, "domain", source, "$"), source, "$.domain");
  if (n < 1 || n > (1LL << 30)) fail(source, "$.domain", "domain size must be positive");
  RelationalStructure s(static_cast<Element>(n));
  const json& rels = member(j, "relations", source, "$");
  if (!rels.is_array()) fail(source, "$.relations", "expected an array");
  for (size_t i = 0; i < rels.size(); ++i) {
    const std::string path = "$.relations[" + std::to_string(i) + "]";
    const json& name = member(rels[i], "name", source, path);
    if (!name.is_string()) fail(source, path + ".name", "expected a string");
    const long long arity = get_int(member(rels[i], "arity", source, path), source, path + ".arity");
    if (arity < 1) fail(source, path + ".arity", "arity must be at least 1");
    Relation& r = s.add_relation(name.get<std::string>(), static_cast<int>(arity));
    const json& tuples = member(rels[i], "tuples", source, path);
    if (!tuples.is_array()) fail(source, path + ".tuples", "expected an array");
    for (size_t t = 0; t < tuples.size(); ++t) {
      const std::string tp = path + ".tuples[" + std::to_string(t) + "]";
      if (!tuples[t].is_array()) fail(source, tp, "expected an array");
      if (tuples[t].size() != static_cast<size_t>(arity)) fail(source, tp, "arity mismatch");
      for (const auto& v : tuples[t]) r.data.push_back(static_cast<Element>(get_int(v, source, tp)));
    }
  }
  const auto violations = validate(s);
  if (!violations.empty()) {
    const auto& v = violations.front();
    std::string path = "$";
    if (!v.relation.empty()) path += " relation \"" + v.relation + "\"";
    if (v.tuple) path += " tuple " + std::to_string(*v.tuple);
    fail(source, path, v.message);
  }
  return s;
}

std::string to_json(const RelationalStructure& s) {
  json rels = json::array();
  for (const auto& r : s.relations) {
    json tuples = json::array();
    for (size_t t = 0; t < r.size(); ++t) {
      auto tup = r.tuple(t);
      tuples.push_back(std::vector<Element>(tup.begin(), tup.end()));
    }
    rels.push_back(json{{"name", r.name}, {"arity", r.arity}, {"tuples", std::move(tuples)}});
  }
  return json{{"domain", s.size}, {"relations", std::move(rels)}}.dump() + "\n";
}

GroupTable parse_group(std::string_view text, std::string_view source) {
  return group_from_json(parse_json(text, source), source, "$");
}

std::string to_json(const GroupTable& g) { return group_json(g).dump() + "\n"; }

Graph parse_graph(std::string_view text, std::string_view source) {
  const auto lines = content_lines(text, 'c');
  if (lines.empty()) throw ParseError(at_line(source, 1), "missing 'p edge n m' header");
  std::istringstream head(lines[0].second);
  std::string p, kind;
  head >> p >> kind;
  if (p != "p" || kind != "edge") throw ParseError(at_line(source, lines[0].first), "expected 'p edge n m'");
  const auto nm = read_ints(head, 2, source, lines[0].first);
  if (nm[0] < 0 || nm[1] < 0) throw ParseError(at_line(source, lines[0].first), "negative count");
  if (lines.size() - 1 != static_cast<size_t>(nm[1]))
    throw ParseError(at_line(source, lines.back().first),
                     "header announces " + std::to_string(nm[1]) + " edges, found " + std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i].second);
    std::string e;
    in >> e;
    if (e != "e") throw ParseError(at_line(source, lines[i].first), "expected 'e u v'");
    const auto uv = read_ints(in, 2, source, lines[i].first);
    for (long long x : uv)
      if (x < 1 || x > nm[0]) throw ParseError(at_line(source, lines[i].first), "vertex " + std::to_string(x) + " out of range");
    if (uv[0] == uv[1]) throw ParseError(at_line(source, lines[i].first), "loop at vertex " + std::to_string(uv[0]));
    edges.emplace_back(static_cast<int>(uv[0] - 1), static_cast<int>(uv[1] - 1));
  }
  return Graph::from_edges(static_cast<int>(nm[0]), std::move(edges));
}

std::string to_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.vertices) + " " + std::to_string(g.edges.size()) + "\n";
  for (auto [u, v] : g.edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

NaeInstance parse_nae(std::string_view text, std::string_view source) {
  const auto lines = content_lines(text, '#');
  if (lines.empty()) throw ParseError(at_line(source, 1), "missing 'nae n m' header");
  std::istringstream head(lines[0].second);
  std::string tag;
  head >> tag;
  if (tag != "nae") throw ParseError(at_line(source, lines[0].first), "expected 'nae n m'");
  const auto nm = read_ints(head, 2, source, lines[0].first);
  if (nm[0] < 0 || nm[1] < 0) throw ParseError(at_line(source, lines[0].first), "negative count");
  if (lines.size() - 1 != static_cast<size_t>(nm[1]))
    throw ParseError(at_line(source, lines.back().first),
                     "header announces " + std::to_string(nm[1]) + " clauses, found " + std::to_string(lines.size() - 1));
  NaeInstance phi;
  phi.variables = static_cast<int>(nm[0]);
  for (size_t i = 1; i < lines.size(); ++i) {
    std::istringstream in(lines[i].second);
    const auto c = read_ints(in, 3, source, lines[i].first);
    std::array<int, 3> clause{};
    for (size_t j = 0; j < 3; ++j) {
      if (c[j] < 1 || c[j] > nm[0]) throw ParseError(at_line(source, lines[i].first), "variable " + std::to_string(c[j]) + " out of range");
      clause[j] = static_cast<int>(c[j] - 1);
    }
    phi.clauses.push_back(clause);
  }
  return phi;
}

std::string to_text(const NaeInstance& phi) {
  std::string out = "nae " + std::to_string(phi.variables) + " " + std::to_string(phi.clauses.size()) + "\n";
  for (const auto& c : phi.clauses)
    out += std::to_string(c[0] + 1) + " " + std::to_string(c[1] + 1) + " " + std::to_string(c[2] + 1) + "\n";
  return out;
}

std::string to_json(const MetaVerdict& v) {
  json j{{"answer", v.answer ? "yes" : "no"}};
  if (v.witness) {
    json w = json::object();
    for (const auto& [name, op] : *v.witness) w[name] = table_json(op);
    j["witness"] = std::move(w);
  }
  if (v.group) j["group"] = group_json(*v.group);
  j["promise_violation"] = v.promise_violation;
  return j.dump() + "\n";
}

MetaVerdict parse_verdict(std::string_view text, std::string_view source) {
  const json j = parse_json(text, source);
  MetaVerdict v;
  const json& answer = member(j, "answer", source, "$");
  if (answer != "yes" && answer != "no") fail(source, "$.answer", "expected \"yes\" or \"no\"");
  v.answer = answer == "yes";
  if (auto it = j.find("witness"); it != j.end()) {
    if (!it->is_object()) fail(source, "$.witness", "expected an object");
    Interpretation ops;
    for (auto& [name, op] : it->items()) {
      const std::string path = "$.witness." + name;
      const long long domain = get_int(member(op, "domain", source, path), source, path + ".domain");
      const long long arity = get_int(member(op, "arity", source, path), source, path + ".arity");
      const json& table = member(op, "table", source, path);
      if (!table.is_array()) fail(source, path + ".table", "expected an array");
      std::vector<Element> values;
      for (const auto& x : table) values.push_back(static_cast<Element>(get_int(x, source, path + ".table")));
      try {
        ops.emplace(name, OperationTable(static_cast<Element>(domain), static_cast<int>(arity), std::move(values)));
      } catch (const InvalidArgument& e) {
        fail(source, path, e.what());
      }
    }
    v.witness = std::move(ops);
  }
  if (auto it = j.find("group"); it != j.end()) v.group = group_from_json(*it, source, "$.group");
  if (auto it = j.find("promise_violation"); it != j.end()) {
    if (!it->is_boolean()) fail(source, "$.promise_violation", "expected a boolean");
    v.promise_violation = it->get<bool>();
  }
  return v;
}

std::string to_json(const Decomposition& d) {
  json m = json::array();
  for (auto [u, v] : d.matching) m.push_back({u, v});
  return json{{"matching", std::move(m)}, {"side", d.side}}.dump() + "\n";
}

}  // namespace polymeta
