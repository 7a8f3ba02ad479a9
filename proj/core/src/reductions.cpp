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

#include "polymeta/reductions.hpp"

#include <algorithm>

#include "polymeta/error.hpp"
#include "polymeta/group.hpp"

namespace polymeta {
namespace {

using std::size_t;

}  // namespace

void validate(const NaeInstance& phi) {
  if (phi.variables < 0) throw InvalidArgument("negative variable count");
  for (size_t i = 0; i < phi.clauses.size(); ++i)
    for (int v : phi.clauses[i])
      if (v < 0 || v >= phi.variables)
        throw InvalidArgument("clause " + std::to_string(i) + " uses variable " + std::to_string(v) + " out of range");
}

bool nae_brute(const NaeInstance& phi, const Limits& limits) {
  validate(phi);
  if (static_cast<std::uint64_t>(phi.variables) > limits.nae_variables)
    throw LimitExceeded("nae_brute is limited to " + std::to_string(limits.nae_variables) + " variables");
  const std::uint64_t count = std::uint64_t{1} << phi.variables;
  for (std::uint64_t a = 0; a < count; ++a) {
    bool ok = true;
    for (const auto& c : phi.clauses) {
      const auto ones = ((a >> c[0]) & 1) + ((a >> c[1]) & 1) + ((a >> c[2]) & 1);
      if (ones == 0 || ones == 3) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

int duplication_factor(const NaeInstance& phi) {
  std::vector<int> occurrences(static_cast<size_t>(phi.variables), 0);
  for (const auto& c : phi.clauses)
    for (int v : c) ++occurrences[static_cast<size_t>(v)];
  int least = 0;
  for (int o : occurrences)
    if (o > 0 && (least == 0 || o < least)) least = o;
  if (least == 0) return 1;
  return (3 + least - 1) / least;
}

Graph nae3sat_to_graph(const NaeInstance& phi) {
  validate(phi);
  const int copies = duplication_factor(phi);
  std::vector<std::array<int, 3>> clauses;
  for (int t = 0; t < copies; ++t) clauses.insert(clauses.end(), phi.clauses.begin(), phi.clauses.end());
  const int m = static_cast<int>(clauses.size());
  const int vertices = 3 * m + 2 * phi.variables;
  auto var_vertex = [&](int k, int l) { return 3 * m + 2 * k + l; };
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(3 * i, 3 * i + 1);
    edges.emplace_back(3 * i, 3 * i + 2);
    edges.emplace_back(3 * i + 1, 3 * i + 2);
  }
  for (int k = 0; k < phi.variables; ++k) edges.emplace_back(var_vertex(k, 0), var_vertex(k, 1));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 2; ++l) edges.emplace_back(3 * i + j, var_vertex(clauses[static_cast<size_t>(i)][static_cast<size_t>(j)], l));
  return Graph::from_edges(vertices, std::move(edges));
}

std::vector<std::string> validate(const Decomposition& d, const Graph& g) {
  std::vector<std::string> out;
  if (d.side.size() != static_cast<size_t>(g.vertices)) {
    out.push_back("side assignment has " + std::to_string(d.side.size()) + " entries for " +
                  std::to_string(g.vertices) + " vertices");
    return out;
  }
  for (size_t v = 0; v < d.side.size(); ++v)
    if (d.side[v] != 0 && d.side[v] != 1) out.push_back("vertex " + std::to_string(v) + " has no side");
  std::vector<int> matched(static_cast<size_t>(g.vertices), 0);
  std::vector<Edge> m;
  for (auto [u, v] : d.matching) {
    if (u > v) std::swap(u, v);
    if (!g.has_edge(u, v)) {
      out.push_back("matching edge {" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
      continue;
    }
    if (++matched[static_cast<size_t>(u)] > 1 || ++matched[static_cast<size_t>(v)] > 1)
      out.push_back("matching edges share a vertex at {" + std::to_string(u) + "," + std::to_string(v) + "}");
    m.emplace_back(u, v);
  }
  std::sort(m.begin(), m.end());
  if (!out.empty()) return out;
  for (auto [u, v] : g.edges)
    if (!std::binary_search(m.begin(), m.end(), Edge{u, v}) && d.side[static_cast<size_t>(u)] == d.side[static_cast<size_t>(v)])
      out.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) + "} lies inside a side");
  return out;
}

namespace {

class DecompositionSearch {
 public:
  explicit DecompositionSearch(const Graph& g) : g_(g), adj_(g.adjacency()) {
    const size_t n = static_cast<size_t>(g.vertices);
    first_of_component_.assign(n, 0);
    std::vector<char> seen(n, 0);
    for (size_t s = 0; s < n; ++s) {
      if (seen[s]) continue;
      first_of_component_[s] = 1;
      std::vector<int> stack{static_cast<int>(s)};
      seen[s] = 1;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj_[static_cast<size_t>(u)])
          if (!seen[static_cast<size_t>(v)]) {
            seen[static_cast<size_t>(v)] = 1;
            stack.push_back(v);
          }
      }
    }
  }

  std::optional<Decomposition> run() {
    side_.assign(static_cast<size_t>(g_.vertices), -1);
    if (!search(0)) return std::nullopt;
    Decomposition d;
    d.side = side_;
    for (auto [u, v] : g_.edges)
      if (side_[static_cast<size_t>(u)] == side_[static_cast<size_t>(v)]) d.matching.emplace_back(u, v);
    return d;
  }

 private:
  int same_side_neighbours(int u) const {
    int c = 0;
    for (int w : adj_[static_cast<size_t>(u)])
      if (side_[static_cast<size_t>(w)] == side_[static_cast<size_t>(u)]) ++c;
    return c;
  }

  // Colours v and every vertex forced by it; records the trail for undo.
  bool assign(int v, int colour, std::vector<int>& trail) {
    std::vector<std::pair<int, int>> queue{{v, colour}};
    for (size_t q = 0; q < queue.size(); ++q) {
      auto [x, c] = queue[q];
      auto& sx = side_[static_cast<size_t>(x)];
      if (sx >= 0) {
        if (sx != c) return false;
        continue;
      }
      sx = c;
      trail.push_back(x);
      if (same_side_neighbours(x) > 1) return false;
      // A vertex with one same-side neighbour pushes all others across.
      for (int u : adj_[static_cast<size_t>(x)]) {
        if (side_[static_cast<size_t>(u)] < 0) continue;
        const int su = same_side_neighbours(u);
        if (su > 1) return false;
        if (su == 1)
          for (int w : adj_[static_cast<size_t>(u)])
            if (side_[static_cast<size_t>(w)] < 0) queue.emplace_back(w, 1 - side_[static_cast<size_t>(u)]);
      }
      if (same_side_neighbours(x) == 1)
        for (int w : adj_[static_cast<size_t>(x)])
          if (side_[static_cast<size_t>(w)] < 0) queue.emplace_back(w, 1 - c);
    }
    return true;
  }

  bool search(int from) {
    int v = from;
    while (v < g_.vertices && side_[static_cast<size_t>(v)] >= 0) ++v;
    if (v == g_.vertices) return true;
    const int colours = first_of_component_[static_cast<size_t>(v)] ? 1 : 2;
    for (int c = 0; c < colours; ++c) {
      std::vector<int> trail;
      const bool ok = assign(v, c, trail) && search(v + 1);
      if (ok) return true;
      for (int x : trail) side_[static_cast<size_t>(x)] = -1;
    }
    return false;
  }

  const Graph& g_;
  std::vector<std::vector<int>> adj_;
  std::vector<char> first_of_component_;
  std::vector<int> side_;
};

}  // namespace

std::optional<Decomposition> decompose_matching_bipartite(const Graph& g, const Limits& limits) {
  if (static_cast<std::uint64_t>(g.vertices) > limits.decompose_vertices)
    throw LimitExceeded("decomposition search is limited to " + std::to_string(limits.decompose_vertices) + " vertices");
  if (is_bipartite(g)) {
    // Proper two-colouring, empty matching.
    Decomposition d{{}, std::vector<int>(static_cast<std::size_t>(g.vertices), -1)};
    const auto adj = g.adjacency();
    for (int s = 0; s < g.vertices; ++s) {
      if (d.side[static_cast<std::size_t>(s)] >= 0) continue;
      d.side[static_cast<std::size_t>(s)] = 0;
      std::vector<int> queue{s};
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (int w : adj[static_cast<std::size_t>(queue[q])])
          if (d.side[static_cast<std::size_t>(w)] < 0) {
            d.side[static_cast<std::size_t>(w)] = 1 - d.side[static_cast<std::size_t>(queue[q])];
            queue.push_back(w);
          }
    }
    return d;
  }
  auto d = DecompositionSearch(g).run();
  if (d && !validate(*d, g).empty()) throw Error("decomposition search produced an invalid result");
  return d;
}

Graph degree_four_gadget() {
  return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
}

bool needs_gadget(const Graph& g) {
  const auto deg = g.degrees();
  return is_bipartite(g) || std::none_of(deg.begin(), deg.end(), [](int d) { return d >= 4; });
}

long long smallest_prime_at_least(long long n) {
  while (!is_prime(n)) ++n;
  return n;
}

std::string edge_relation_name(int u, int v) { return "E" + std::to_string(u) + "_" + std::to_string(v); }

GraphReduction graph_to_structure(const Graph& g) {
  GraphReduction out;
  out.gadget_added = needs_gadget(g);
  out.graph = out.gadget_added ? disjoint_union(g, degree_four_gadget()) : g;
  const long long n = out.graph.vertices;
  out.p = static_cast<Element>(smallest_prime_at_least(std::max(5LL, (n + 1) / 2)));
  out.structure = RelationalStructure(4 * out.p);
  for (auto [u, v] : out.graph.edges) {
    auto& r = out.structure.add_relation(edge_relation_name(u, v), 1);
    r.add({u});
    r.add({v});
  }
  out.report = std::string(out.gadget_added ? "added gadget on vertices " + std::to_string(g.vertices) + ".." +
                                                  std::to_string(g.vertices + 5) + "; "
                                            : "") +
               "p = " + std::to_string(out.p) + ", domain " + std::to_string(4 * out.p);
  return out;
}

std::vector<Element> embed_decomposition(const Decomposition& d, Element p) {
  const size_t n = d.side.size();
  const Element half = 2 * p;
  std::vector<Element> image(n, -1);
  for (int s = 0; s < 2; ++s) {
    std::vector<char> slot(static_cast<size_t>(half), 0);
    Element next_pair = 0;
    size_t count = 0;
    for (size_t v = 0; v < n; ++v) count += d.side[v] == s;
    if (count > static_cast<size_t>(half))
      throw InvalidArgument("side " + std::to_string(s) + " has " + std::to_string(count) + " vertices, more than 2p");
    for (auto [u, v] : d.matching) {
      if (d.side[static_cast<size_t>(u)] != s || d.side[static_cast<size_t>(v)] != s) continue;
      image[static_cast<size_t>(u)] = dihedral_element(4 * p, s, next_pair);
      image[static_cast<size_t>(v)] = dihedral_element(4 * p, s, next_pair + p);
      slot[static_cast<size_t>(next_pair)] = slot[static_cast<size_t>(next_pair + p)] = 1;
      ++next_pair;
    }
    Element free_slot = 0;
    for (size_t v = 0; v < n; ++v) {
      if (d.side[v] != s || image[v] >= 0) continue;
      while (slot[static_cast<size_t>(free_slot)]) ++free_slot;
      slot[static_cast<size_t>(free_slot)] = 1;
      image[v] = dihedral_element(4 * p, s, free_slot);
    }
  }
  return image;
}

RelationalStructure add_fresh_element(const RelationalStructure& a) {
  RelationalStructure out = a;
  out.size = a.size + 1;
  std::string name = "U";
  for (int i = 0; out.find(name); ++i) name = "U" + std::to_string(i);
  auto& r = out.add_relation(name, 1);
  for (Element x = 0; x < a.size; ++x) r.add({x});
  return out;
}

}  // namespace polymeta
