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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "polymeta/graph.hpp"
#include "polymeta/limits.hpp"
#include "polymeta/structure.hpp"

namespace polymeta {

/// Positive NAE-3SAT: every clause lists three variables (0-indexed) that
/// must not all receive the same value.
struct NaeInstance {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;

  friend bool operator==(const NaeInstance&, const NaeInstance&) = default;
};

/// Throws InvalidArgument on out-of-range variables.
void validate(const NaeInstance& phi);

/// Exhaustive check over all 2^n assignments.
bool nae_brute(const NaeInstance& phi, const Limits& limits = Limits::defaults());

/// Number of copies of the clause list needed so that every variable that
/// occurs at all occurs at least three times.
int duplication_factor(const NaeInstance& phi);

/// The graph of the NAE-3SAT reduction. With m clauses after duplication,
/// vertex 3i+j is the j-th literal of clause i and vertex 3m + 2k + l is the
/// l-th copy of variable k.
Graph nae3sat_to_graph(const NaeInstance& phi);

/// An edge partition into a matching and a bipartite graph. side[v] is 0 or
/// 1; every edge outside the matching joins different sides.
struct Decomposition {
  std::vector<Edge> matching;
  std::vector<int> side;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Problems with `d` as a decomposition of `g` (empty when valid).
std::vector<std::string> validate(const Decomposition& d, const Graph& g);

/// Exact search; throws LimitExceeded above limits.decompose_vertices.
/// Vertices are coloured in index order, side 0 first, with forced moves
/// propagated; the matching consists of the edges inside a side. Bipartite
/// graphs get a proper two-colouring and an empty matching.
std::optional<Decomposition> decompose_matching_bipartite(const Graph& g,
                                                          const Limits& limits = Limits::defaults());

/// A 5-cycle 0..4 plus vertex 5 adjacent to 1, 2, 3 and 4: not bipartite,
/// has a vertex of degree four, and decomposes.
Graph degree_four_gadget();

/// True when the graph is bipartite or has no vertex of degree at least 4.
bool needs_gadget(const Graph& g);

long long smallest_prime_at_least(long long n);

struct GraphReduction {
  Graph graph;  // after preprocessing
  bool gadget_added = false;
  Element p = 0;
  RelationalStructure structure;
  std::string report;
};

/// Adds the gadget as a separate component when needed, picks the smallest
/// prime p >= 5 with |V| <= 2p and returns the structure on 4p elements with
/// one unary relation {u, v} per edge.
GraphReduction graph_to_structure(const Graph& g);

/// Name of the relation standing for edge {u, v}.
std::string edge_relation_name(int u, int v);

/// Maps side 0 to rotations d^l and side 1 to reflections s d^l of the
/// dihedral group of order 4p (indexing of dihedral()), with the two ends of
/// each matching edge inside a side at l and l + p. Throws InvalidArgument
/// when a side has more than 2p vertices.
std::vector<Element> embed_decomposition(const Decomposition& d, Element p);

/// Adds one element and a unary relation holding the old domain.
RelationalStructure add_fresh_element(const RelationalStructure& a);

}  // namespace polymeta
