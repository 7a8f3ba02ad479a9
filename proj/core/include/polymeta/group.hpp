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

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polymeta/graph.hpp"
#include "polymeta/limits.hpp"
#include "polymeta/operation.hpp"
#include "polymeta/structure.hpp"

namespace polymeta {

/// A finite group given by its full multiplication table.
class GroupTable {
 public:
  GroupTable() = default;
  /// `mul` is row-major: mul[a * order + b] = a * b. Checks the Latin square
  /// property, the identity and inverses; associativity is checked
  /// exhaustively for orders up to kAssociativityCheckBound.
  GroupTable(Element order, std::vector<Element> mul);

  static constexpr Element kAssociativityCheckBound = 128;

  Element order() const { return order_; }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const {
    return mul_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b)];
  }
  Element inv(Element a) const { return inv_[static_cast<std::size_t>(a)]; }
  Element pow(Element a, long long k) const;
  int element_order(Element a) const;
  const std::vector<Element>& table() const { return mul_; }

  /// Full n^3 associativity check.
  bool is_associative() const;

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  Element order_ = 0;
  Element identity_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
};

bool is_prime(long long n);

GroupTable cyclic(Element n);
/// Element (g, h) has index h * |G| + g.
GroupTable direct_product(const GroupTable& g, const GroupTable& h);

/// Action of H on G: action[h] is the permutation of G by which h acts.
using GroupAction = std::vector<std::vector<Element>>;

/// G x| H with (g1, h1)(g2, h2) = (g1 * action[h1](g2), h1 h2). Element
/// (g, h) has index h * |G| + g. Throws InvalidArgument unless the action is
/// a homomorphism into Aut(G).
GroupTable semidirect(const GroupTable& g, const GroupTable& h, const GroupAction& action);

/// Dihedral group of the given (even) order 2n. The element s^k d^l has
/// index k * n + l.
GroupTable dihedral(Element order);
Element dihedral_element(Element order, int reflection, int rotation);

/// C_p x| C_4 with the generator of C_4 acting by inversion.
GroupTable dicyclic_4p(Element p);
/// C_p x| C_4 with the generator acting by x -> x^k, k of multiplicative
/// order 4 mod p (p = 1 mod 4). k = 0 picks the smallest such k.
GroupTable cp_c4_faithful(Element p, Element k = 0);

using Subgroup = std::vector<Element>;  // sorted

/// Every subgroup, sorted by (size, elements).
std::vector<Subgroup> all_subgroups(const GroupTable& g, const Limits& limits = Limits::defaults());
std::vector<Subgroup> subgroups_of_order(const GroupTable& g, Element m,
                                         const Limits& limits = Limits::defaults());

/// Is `r` (arity k, tuples over G) a coset of a subgroup of G^k under the
/// componentwise operation?
bool is_coset(const Relation& r, const GroupTable& g);

/// Vertices are the group elements; edges are the two-element cosets of
/// the subgroups of order two.
Graph coset_graph(const GroupTable& g);

/// The cosets of the order-two subgroups of dihedral(4m), listed by the
/// closed form {d^k, s d^l} and {a, a d^m}. Throws InvalidArgument unless
/// `d` is exactly the table built by dihedral() with order divisible by 4.
std::vector<Edge> cosets_of_order2(const GroupTable& d);

/// Calls `yield` on one representative (identity 0) of every isomorphism
/// class of groups of order n; stops early when `yield` returns false.
void enumerate_groups_on_set(Element n, const std::function<bool(const GroupTable&)>& yield,
                             const Limits& limits = Limits::defaults());
std::vector<GroupTable> enumerate_groups_on_set(Element n, const Limits& limits = Limits::defaults());

/// An isomorphism as a map from elements of `a` to elements of `b`.
std::optional<std::vector<Element>> find_isomorphism(const GroupTable& a, const GroupTable& b);
bool is_isomorphic(const GroupTable& a, const GroupTable& b);

/// Number of elements of each order.
std::map<int, int> order_census(const GroupTable& g);

/// The candidate groups of order 4p (p >= 5 prime), labelled.
std::vector<std::pair<std::string, GroupTable>> order_4p_candidates(Element p);
/// One of "C_2xC_2xC_p", "C_4p", "D_4p", "Dic_4p", "C_p:C_4".
std::string classify_order_4p(const GroupTable& g);

/// (x, y, z) -> x y^-1 z.
OperationTable heap_from_group(const GroupTable& g);
/// Group with identity e and product m(x, e, y). Throws InvalidArgument if
/// m is not a heap.
GroupTable group_from_heap(const OperationTable& m, Element e);

/// Relabels `g` along the bijection `perm` (old element -> new element).
GroupTable relabel(const GroupTable& g, const std::vector<Element>& perm);

}  // namespace polymeta
