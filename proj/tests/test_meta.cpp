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

#include <numeric>

#include "polymeta/error.hpp"
#include "polymeta/group.hpp"
#include "polymeta/identities.hpp"
#include "polymeta/meta.hpp"
#include "polymeta/oracles.hpp"
#include "polymeta/reductions.hpp"

using namespace polymeta;

namespace {

RelationalStructure z4_example() {
  RelationalStructure b(4);
  auto& r = b.add_relation("R", 2);
  for (Element x = 0; x < 4; ++x) r.add({x, (x + 1) % 4});
  b.add_relation("S", 1).data = {0, 2};
  return b;
}

RelationalStructure no_maltsev() {
  RelationalStructure b(2);
  b.add_relation("R", 2).data = {0, 0, 0, 1, 1, 0};
  return b;
}

RelationalStructure binary(Element n, unsigned bits) {
  RelationalStructure b(n);
  auto& r = b.add_relation("R", 2);
  for (unsigned code = 0; code < static_cast<unsigned>(n * n); ++code)
    if ((bits >> code) & 1) r.add(decode_tuple(code, static_cast<std::uint64_t>(n), 2));
  return b;
}

OperationTable group_heap(Element n) {
  return OperationTable::from_function(n, 3, [n](std::span<const Element> a) { return ((a[0] - a[1] + a[2]) % n + n) % n; });
}

}  // namespace

TEST_CASE("heap predicates") {
  for (Element n = 1; n <= 5; ++n) {
    CHECK(is_maltsev(group_heap(n)));
    CHECK(is_heap(group_heap(n)));
    CHECK(is_abelian_heap(group_heap(n)));
  }
  const auto d10 = heap_from_group(dihedral(10));
  CHECK(is_heap(d10));
  CHECK_FALSE(is_abelian_heap(d10));
  CHECK_FALSE(is_maltsev(OperationTable::projection(3, 3, 0)));
  CHECK_THROWS_AS(is_maltsev(OperationTable::projection(3, 2, 0)), InvalidArgument);
}

TEST_CASE("indicator structure") {
  const auto b = binary(2, 0b0010);
  const auto ind = indicator_structure(b, with_idempotence(maltsev_identities()));
  REQUIRE(ind.copies.size() == 1);
  CHECK(ind.copies[0].arity == 3);
  CHECK(ind.instance.size >= 8);
  CHECK(ind.values == 2);
  CHECK(ind.target.relations.size() == b.relations.size() + 1 + 2);

  IdentitySet lone;
  lone.declare("f", 2);
  const auto plain = indicator_structure(b, lone);
  CHECK(plain.instance.size == 4);
  CHECK(hom_search(plain.instance, plain.target).has_value() == hom_search(power(b, 2), b).has_value());
}

TEST_CASE("polymorphism existence") {
  const auto sigma = with_idempotence(maltsev_identities());
  const auto yes = has_polymorphism(binary(2, 0b0010), sigma);
  CHECK(yes.answer);
  REQUIRE(yes.witness);
  CHECK(is_valid_witness(*yes.witness, binary(2, 0b0010), sigma));
  CHECK_FALSE(has_polymorphism(no_maltsev(), maltsev_identities()).answer);
  const auto z4 = has_polymorphism(z4_example(), maltsev_identities());
  CHECK(z4.answer);
  CHECK(is_polymorphism(group_heap(4), z4_example()));
  IdentitySet unary_symbol;
  unary_symbol.declare("u", 1);
  CHECK(has_polymorphism(no_maltsev(), unary_symbol).answer);
  CHECK_THROWS_AS(has_polymorphism(no_maltsev(), parse_identities("f(f(x)) = x")), InvalidArgument);
}

TEST_CASE("indicator agrees with brute force at domain 2") {
  const auto sigma = with_idempotence(maltsev_identities());
  for (unsigned bits = 0; bits < 16; ++bits) {
    const auto b = binary(2, bits);
    CHECK(has_polymorphism(b, sigma).answer == oracle::has_maltsev_on_two(b, true));
  }
}

TEST_CASE("coset polymorphisms on the graph structures") {
  const auto k5 = graph_to_structure(complete_graph(5));
  CHECK(k5.p == 5);
  CHECK(k5.structure.size == 20);
  CHECK_FALSE(has_coset_polymorphism(k5.structure).answer);

  const auto apex = graph_to_structure(degree_four_gadget());
  CHECK(apex.p == 5);
  CHECK_FALSE(apex.gadget_added);
  const auto v = has_coset_polymorphism(apex.structure);
  REQUIRE(v.answer);
  REQUIRE(v.group);
  CHECK(classify_order_4p(*v.group) == "D_4p");
  CHECK(is_heap(v.witness->at("m")));
  CHECK(oracle::preserves(v.witness->at("m"), apex.structure));
}

TEST_CASE("coset polymorphisms, general search") {
  RelationalStructure full(6);
  full.add_relation("R", 2);
  for (std::uint64_t c = 0; c < 36; ++c) full.relations[0].add(decode_tuple(c, 6, 2));
  CHECK(has_coset_polymorphism(full).answer);
  CHECK(has_coset_polymorphism(z4_example()).answer);
  CHECK_FALSE(has_coset_polymorphism(no_maltsev()).answer);
  // Three-element set in a four-element domain: 3 does not divide 4.
  RelationalStructure three(4);
  three.add_relation("U", 1).data = {0, 1, 2};
  CHECK_FALSE(has_coset_polymorphism(three).answer);
  const auto label = coset_labelling(z4_example(), cyclic(4));
  CHECK(label.has_value());
}

TEST_CASE("coset search matches brute force on small structures") {
  oracle::Rng rng(5);
  std::uniform_int_distribution<Element> size(1, 4);
  for (int i = 0; i < 80; ++i) {
    const auto b = oracle::random_structure(rng, size(rng), 2, 2, 0.5);
    bool brute = false;
    for (const auto& g : enumerate_groups_on_set(b.size)) {
      const auto heap = heap_from_group(g);
      std::vector<Element> perm(static_cast<size_t>(b.size));
      std::iota(perm.begin(), perm.end(), 0);
      do {
        // Transport the heap along perm: m'(x,y,z) = perm^-1(m(perm x, perm y, perm z)).
        std::vector<Element> inv(perm.size());
        for (size_t k = 0; k < perm.size(); ++k) inv[static_cast<size_t>(perm[k])] = static_cast<Element>(k);
        const auto m = OperationTable::from_function(b.size, 3, [&](std::span<const Element> a) {
          return inv[static_cast<size_t>(heap({perm[static_cast<size_t>(a[0])], perm[static_cast<size_t>(a[1])],
                                               perm[static_cast<size_t>(a[2])]}))];
        });
        brute = oracle::preserves(m, b);
      } while (!brute && std::next_permutation(perm.begin(), perm.end()));
      if (brute) break;
    }
    const auto v = has_coset_polymorphism(b);
    CHECK(v.answer == brute);
    if (v.answer) CHECK(oracle::preserves(v.witness->at("m"), b));
  }
}

TEST_CASE("self-reduction with exact and dishonest solvers") {
  const UniformSolver exact = [](const RelationalStructure& a, const RelationalStructure& b) {
    return hom_search(a, b).has_value();
  };
  const UniformSolver yes_man = [](const RelationalStructure&, const RelationalStructure&) { return true; };
  const auto sigma = maltsev_identities();
  for (Element n = 2; n <= 3; ++n)
    for (unsigned bits = 0; bits < (1u << (n * n)); bits += (n == 2 ? 1u : 37u)) {
      const auto b = binary(n, bits);
      CHECK(pmeta_generic(b, sigma, exact).answer == has_polymorphism(b, with_idempotence(sigma)).answer);
    }
  RelationalStructure point(1);
  point.add_relation("R", 2).data = {0, 0};
  const auto one = pmeta_generic(point, sigma, exact);
  CHECK(one.answer);

  const auto lie = pmeta_generic(no_maltsev(), sigma, yes_man);
  CHECK_FALSE(lie.answer);
  CHECK(lie.promise_violation);
  const auto raw = pcreameta_generic(no_maltsev(), sigma, yes_man);
  CHECK(raw.answer);
  CHECK(raw.promise_violation);
}

TEST_CASE("abelian heap promise problem") {
  const auto yes = pmeta_abheap_maltsev(z4_example());
  REQUIRE(yes.answer);
  CHECK(oracle::maltsev(yes.witness->at("m")));
  CHECK(oracle::preserves(yes.witness->at("m"), z4_example()));
  CHECK_FALSE(pmeta_abheap_maltsev(no_maltsev()).answer);
  RelationalStructure point(1);
  point.add_relation("R", 1).data = {0};
  CHECK(pmeta_abheap_maltsev(point).answer);
}

TEST_CASE("uniform solving through a witness") {
  const auto b = z4_example();
  const Interpretation w{{"m", group_heap(4)}};
  oracle::Rng rng(9);
  std::uniform_int_distribution<Element> size(1, 5);
  for (int i = 0; i < 40; ++i) {
    RelationalStructure a(size(rng));
    auto& r = a.add_relation("R", 2);
    auto& s = a.add_relation("S", 1);
    std::uniform_int_distribution<Element> pick(0, a.size - 1);
    for (int k = 0; k < 3; ++k) r.add({pick(rng), pick(rng)});
    s.add({pick(rng)});
    CHECK(uniform_solve_via_witness(a, b, w, maltsev_identities()) == oracle::hom_exists(a, b));
  }
  const Interpretation bad{{"m", OperationTable::projection(4, 3, 0)}};
  CHECK_THROWS_AS(uniform_solve_via_witness(b, b, bad, maltsev_identities()), InvalidArgument);
}
