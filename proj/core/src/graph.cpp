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

#include "polymeta/graph.hpp"

#include <algorithm>

#include "polymeta/error.hpp"

namespace polymeta {

Graph Graph::from_edges(int vertices, std::vector<Edge> edges) {
  if (vertices < 0) throw InvalidArgument("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices)
      throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range");
    if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph{vertices, std::move(edges)};
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(static_cast<std::size_t>(vertices), 0);
  for (auto [u, v] : edges) {
    ++d[static_cast<std::size_t>(u)];
    ++d[static_cast<std::size_t>(v)];
  }
  return d;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertices));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::string> validate(const Graph& g) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
      out.push_back("edge " + std::to_string(i) + " has an endpoint out of range");
    if (u == v) out.push_back("edge " + std::to_string(i) + " is a loop");
    if (u > v) out.push_back("edge " + std::to_string(i) + " is not normalized");
    if (i > 0 && !(g.edges[i - 1] < g.edges[i])) out.push_back("edge " + std::to_string(i) + " is a duplicate or out of order");
  }
  return out;
}

bool is_bipartite(const Graph& g) {
  auto adj = g.adjacency();
  std::vector<int> colour(static_cast<std::size_t>(g.vertices), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.vertices; ++s) {
    if (colour[static_cast<std::size_t>(s)] >= 0) continue;
    colour[static_cast<std::size_t>(s)] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)]) {
        auto& cv = colour[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - colour[static_cast<std::size_t>(u)];
          stack.push_back(v);
        } else if (cv == colour[static_cast<std::size_t>(u)]) {
          return false;
        }
      }
    }
  }
  return true;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges;
  for (auto [u, v] : b.edges) edges.emplace_back(u + a.vertices, v + a.vertices);
  return Graph::from_edges(a.vertices + b.vertices, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, std::move(e));
}

Graph complete_bipartite(int left, int right) {
  std::vector<Edge> e;
  for (int u = 0; u < left; ++u)
    for (int v = 0; v < right; ++v) e.emplace_back(u, left + v);
  return Graph::from_edges(left + right, std::move(e));
}

Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph::from_edges(n, std::move(e));
}

}  // namespace polymeta
