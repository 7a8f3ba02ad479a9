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

#include <string>
#include <utility>
#include <vector>

namespace polymeta {

using Edge = std::pair<int, int>;

/// Simple undirected graph on 0..vertices-1. Edges are stored with u < v,
/// sorted and without duplicates.
struct Graph {
  int vertices = 0;
  std::vector<Edge> edges;

  /// Normalizes the edge list; throws InvalidArgument on loops or
  /// out-of-range endpoints.
  static Graph from_edges(int vertices, std::vector<Edge> edges);

  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Problems with the representation (empty when valid).
std::vector<std::string> validate(const Graph& g);

bool is_bipartite(const Graph& g);

/// Disjoint union; vertices of `b` are shifted by a.vertices.
Graph disjoint_union(const Graph& a, const Graph& b);

Graph complete_graph(int n);
Graph complete_bipartite(int left, int right);
Graph cycle_graph(int n);

}  // namespace polymeta
