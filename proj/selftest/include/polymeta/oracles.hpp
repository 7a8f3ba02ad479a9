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

// Brute-force reference implementations. None of them calls the library
// routine it is used to check.

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "polymeta/aip.hpp"
#include "polymeta/graph.hpp"
#include "polymeta/group.hpp"
#include "polymeta/operation.hpp"
#include "polymeta/reductions.hpp"
#include "polymeta/structure.hpp"

namespace polymeta::oracle {

using Rng = std::mt19937_64;

/// Tries every map; `limit` bounds |B|^|A|.
bool hom_exists(const RelationalStructure& a, const RelationalStructure& b, std::uint64_t limit = 1'000'000);

/// Tuple membership by linear scan.
bool contains(const Relation& r, const std::vector<Element>& t);

/// Does op preserve every relation of b (checked over all tuple choices)?
bool preserves(const OperationTable& op, const RelationalStructure& b);

/// m(x,x,y) = m(y,x,x) = y, by direct evaluation.
bool maltsev(const OperationTable& m);

/// Every ternary operation on {0,1}, in table order.
std::vector<OperationTable> ternary_ops_on_two();

/// Does b have a Maltsev polymorphism? Only for |b| = 2.
bool has_maltsev_on_two(const RelationalStructure& b, bool idempotent_only);

/// One graph per isomorphism class on n vertices (n <= 7), by vertex
/// extension and canonical bitmasks over all permutations.
std::vector<Graph> nonisomorphic_graphs(int n);

/// Tries every matching and tests the rest for bipartiteness.
bool decomposable(const Graph& g);

/// Independent NAE check.
bool nae_satisfiable(const NaeInstance& phi);

/// Group on tuples: element codes a_0 + n a_1 + ... of G^k.
struct PowerGroup {
  const GroupTable* g;
  int k;
  std::uint64_t size() const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t identity() const;
  std::vector<Element> decode(std::uint64_t a) const;
};

/// Every subgroup of G^k as a sorted list of codes.
std::vector<std::vector<std::uint64_t>> subgroups(const PowerGroup& g);

/// All distinct left cosets of all subgroups.
std::set<std::vector<std::uint64_t>> all_cosets(const PowerGroup& g);

/// Relation of arity k holding the given codes.
Relation relation_of(const PowerGroup& g, const std::vector<std::uint64_t>& codes);

/// Fraction-free determinant, written independently of the library.
Integer det(const MatrixZ& m);

/// Random structure with the given domain size.
RelationalStructure random_structure(Rng& rng, Element size, int relations, int max_arity, double density);

/// Random coset of a subgroup of Z_d^k generated by up to `gens` elements,
/// as a relation.
Relation random_abelian_coset(Rng& rng, Element d, int k, int gens, const std::string& name);

}  // namespace polymeta::oracle
