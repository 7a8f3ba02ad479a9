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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polymeta/limits.hpp"

namespace polymeta {

/// Domain elements are always 0..n-1.
using Element = std::int32_t;

struct RelationSymbol {
  std::string name;
  int arity = 0;

  friend bool operator==(const RelationSymbol&, const RelationSymbol&) = default;
};

struct Signature {
  std::vector<RelationSymbol> entries;

  /// True if both signatures declare the same (name, arity) pairs,
  /// independent of order.
  bool same_as(const Signature& other) const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// A relation stored as a flat array of tuples.
struct Relation {
  std::string name;
  int arity = 0;
  std::vector<Element> data;

  std::size_t size() const { return arity > 0 ? data.size() / static_cast<std::size_t>(arity) : 0; }
  bool empty() const { return data.empty(); }

  std::span<const Element> tuple(std::size_t i) const {
    return {data.data() + i * static_cast<std::size_t>(arity), static_cast<std::size_t>(arity)};
  }

  void add(std::span<const Element> t) { data.insert(data.end(), t.begin(), t.end()); }
  void add(std::initializer_list<Element> t) { data.insert(data.end(), t.begin(), t.end()); }

  /// Sorts tuples lexicographically and removes duplicates.
  void normalize();

  friend bool operator==(const Relation&, const Relation&) = default;
};

/// Finite relational structure on {0,...,size-1}.
struct RelationalStructure {
  Element size = 0;
  std::vector<Relation> relations;

  RelationalStructure() = default;
  explicit RelationalStructure(Element n) : size(n) {}

  Relation& add_relation(std::string name, int arity);
  const Relation* find(std::string_view name) const;
  Signature signature() const;

  /// n + k + sum(arity * |R|).
  std::uint64_t representation_size() const;

  friend bool operator==(const RelationalStructure&, const RelationalStructure&) = default;
};

struct Violation {
  std::string relation;              // empty for structure-level problems
  std::optional<std::size_t> tuple;  // index within the relation
  std::string message;
};

/// Reports every broken invariant; an empty result means the structure is
/// well formed.
std::vector<Violation> validate(const RelationalStructure& s);

/// Sorted tuple set for membership tests.
class TupleSet {
 public:
  TupleSet() = default;
  explicit TupleSet(const Relation& r);

  bool contains(std::span<const Element> t) const;
  std::size_t size() const { return count_; }
  int arity() const { return arity_; }

 private:
  int arity_ = 0;
  std::size_t count_ = 0;
  std::vector<Element> data_;
};

/// Encodes an m-tuple over {0..base-1} as sum t[i] * base^i.
std::uint64_t encode_tuple(std::span<const Element> t, std::uint64_t base);
std::vector<Element> decode_tuple(std::uint64_t code, std::uint64_t base, std::size_t length);

/// The m-th power of `a`. Element (a_0, ..., a_{m-1}) is encoded by
/// encode_tuple with base |A|.
RelationalStructure power(const RelationalStructure& a, int m,
                          const Limits& limits = Limits::defaults());

struct Homomorphism {
  Element source_size = 0;
  Element target_size = 0;
  std::vector<Element> map;

  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
};

using PartialMap = std::vector<std::optional<Element>>;

/// Complete backtracking search with generalized arc consistency. Returns a
/// homomorphism extending `seed` (if given) or nullopt when none exists.
/// Variables are visited in ascending constraint-graph degree (ties by
/// index), values in ascending order.
std::optional<Homomorphism> hom_search(const RelationalStructure& a, const RelationalStructure& b,
                                       const PartialMap& seed = {});

bool is_homomorphism(const Homomorphism& h, const RelationalStructure& a,
                     const RelationalStructure& b);

/// Composition g after h.
Homomorphism compose(const Homomorphism& g, const Homomorphism& h);

/// Name of the equality relation added by add_singleton_relations().
inline constexpr std::string_view kEqualityRelation = "=";
/// Name of the unary relation {b}.
std::string singleton_relation_name(Element b);

/// Expansion of `b` by the equality relation and every singleton {b}.
RelationalStructure add_singleton_relations(const RelationalStructure& b);

}  // namespace polymeta
