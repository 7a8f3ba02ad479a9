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

#include "polymeta/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "polymeta/aip.hpp"
#include "polymeta/error.hpp"
#include "polymeta/group.hpp"
#include "polymeta/identities.hpp"
#include "polymeta/meta.hpp"
#include "polymeta/oracles.hpp"
#include "polymeta/reductions.hpp"

namespace polymeta::selftest {
namespace {

using oracle::Rng;
using std::size_t;

// Counts checks and keeps the first few failure messages.
class Tally {
 public:
  void expect(bool ok, const std::function<std::string()>& message) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(message());
  }
  void note(std::string s) { notes_.push_back(std::move(s)); }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks, " << failures_ << " failures";
    for (const auto& n : notes_) out << "; " << n;
    for (const auto& m : messages_) out << "; " << m;
    return out.str();
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> notes_;
  std::vector<std::string> messages_;
};

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "graph n=" << g.vertices << " {";
  for (auto [u, v] : g.edges) out << ' ' << u << '-' << v;
  out << " }";
  return out.str();
}

std::string describe(const NaeInstance& phi) {
  std::ostringstream out;
  out << "nae n=" << phi.variables << " [";
  for (const auto& c : phi.clauses) out << " (" << c[0] << ',' << c[1] << ',' << c[2] << ')';
  out << " ]";
  return out.str();
}

std::set<Edge> edge_set(const std::vector<Edge>& edges) {
  std::set<Edge> s;
  for (auto [u, v] : edges) s.emplace(std::min(u, v), std::max(u, v));
  return s;
}

std::vector<std::uint64_t> codes_of(const Relation& r, Element n) {
  std::vector<std::uint64_t> out;
  for (size_t i = 0; i < r.size(); ++i) {
    std::uint64_t c = 0;
    auto t = r.tuple(i);
    for (auto it = t.rbegin(); it != t.rend(); ++it) c = c * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(*it);
    out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Random structure with the relation names and arities of `like`.
RelationalStructure random_like(Rng& rng, Element size, const RelationalStructure& like, double density) {
  RelationalStructure s(size);
  std::bernoulli_distribution keep(density);
  for (const auto& r : like.relations) {
    Relation& rel = s.add_relation(r.name, r.arity);
    std::uint64_t total = 1;
    for (int i = 0; i < r.arity; ++i) total *= static_cast<std::uint64_t>(size);
    for (std::uint64_t code = 0; code < total; ++code) {
      if (!keep(rng)) continue;
      rel.add(decode_tuple(code, static_cast<std::uint64_t>(size), static_cast<size_t>(r.arity)));
    }
  }
  return s;
}

// ---------------------------------------------------------------------------

void dihedral_cosets(Tally& t, Rng&) {
  for (Element m : {1, 2, 3, 5}) {
    const GroupTable d = dihedral(4 * m);
    const auto closed = edge_set(cosets_of_order2(d));
    oracle::PowerGroup pg{&d, 1};
    std::set<Edge> brute;
    for (const auto& c : oracle::all_cosets(pg))
      if (c.size() == 2) brute.emplace(static_cast<int>(c[0]), static_cast<int>(c[1]));
    t.expect(closed == brute, [&] {
      return "order " + std::to_string(4 * m) + ": closed form " + std::to_string(closed.size()) + " vs brute " +
             std::to_string(brute.size());
    });
  }
}

void coset_graph_shape(Tally& t, Rng&) {
  {
    const Graph g = coset_graph(dihedral(20));
    t.expect(g.edges.size() == 110, [&] { return "D20 has " + std::to_string(g.edges.size()) + " edges"; });
    std::vector<Edge> expected;
    for (int a = 0; a < 10; ++a)
      for (int b = 10; b < 20; ++b) expected.emplace_back(a, b);
    for (int l = 0; l < 5; ++l) {
      expected.emplace_back(l, l + 5);
      expected.emplace_back(10 + l, 15 + l);
    }
    t.expect(g == Graph::from_edges(20, expected), [] { return std::string("D20 is not K10,10 plus matchings"); });
  }
  for (int r : {3, 5, 7}) {
    const Graph g = coset_graph(dihedral(2 * r));
    std::vector<Edge> expected;
    for (int a = 0; a < r; ++a)
      for (int b = r; b < 2 * r; ++b) expected.emplace_back(a, b);
    t.expect(g == Graph::from_edges(2 * r, expected), [&] { return "D" + std::to_string(2 * r) + " is not K_{r,r}"; });
  }
}

void check_graph(Tally& t, const Graph& g) {
  const GraphReduction red = graph_to_structure(g);
  const bool before = oracle::decomposable(g);
  const bool after = oracle::decomposable(red.graph);
  t.expect(before == after, [&] { return "preprocessing changed decomposability of " + describe(g); });
  const auto dec = decompose_matching_bipartite(red.graph);
  t.expect(dec.has_value() == after, [&] { return "decomposition search disagrees on " + describe(g); });
  if (dec) t.expect(validate(*dec, red.graph).empty(), [&] { return "invalid decomposition for " + describe(g); });
  const MetaVerdict v = has_coset_polymorphism(red.structure);
  t.expect(v.answer == after, [&] { return "coset polymorphism answer wrong on " + describe(g); });
  if (v.answer) {
    const bool witnessed = v.witness && v.witness->count("m");
    t.expect(witnessed, [&] { return "missing witness for " + describe(g); });
    if (witnessed) {
      const OperationTable& m = v.witness->at("m");
      t.expect(is_heap(m) && oracle::maltsev(m) && oracle::preserves(m, red.structure),
               [&] { return "bad witness for " + describe(g); });
    }
  }
}

void graph_pipeline(Tally& t, Rng& rng) {
  const int census[] = {1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = oracle::nonisomorphic_graphs(n);
    t.expect(static_cast<int>(graphs.size()) == census[n - 1],
             [&] { return "wrong class count at n=" + std::to_string(n); });
    for (const auto& g : graphs) check_graph(t, g);
  }
  std::uniform_real_distribution<double> density(0.15, 0.85);
  for (int i = 0; i < 200; ++i) {
    std::bernoulli_distribution keep(density(rng));
    std::vector<Edge> edges;
    for (int v = 1; v < 8; ++v)
      for (int u = 0; u < v; ++u)
        if (keep(rng)) edges.emplace_back(u, v);
    check_graph(t, Graph::from_edges(8, std::move(edges)));
  }
}

void check_nae(Tally& t, const NaeInstance& phi, const Limits& limits) {
  const bool sat = nae_brute(phi, limits);
  t.expect(sat == oracle::nae_satisfiable(phi), [&] { return "brute force disagrees on " + describe(phi); });
  const Graph g = nae3sat_to_graph(phi);
  const auto dec = decompose_matching_bipartite(g, limits);
  t.expect(dec.has_value() == sat, [&] { return "decomposability differs on " + describe(phi); });
  if (dec) t.expect(validate(*dec, g).empty(), [&] { return "invalid decomposition on " + describe(phi); });
}

void nae_pipeline(Tally& t, Rng& rng) {
  Limits limits = Limits::defaults();
  limits.decompose_vertices = std::max<std::uint64_t>(limits.decompose_vertices, 64);
  long exhaustive = 0;
  for (int n = 1; n <= 3; ++n) {
    const int triples = n * n * n;
    auto clause = [n](int code) {
      return std::array<int, 3>{code % n, (code / n) % n, code / (n * n)};
    };
    check_nae(t, NaeInstance{n, {}}, limits);
    ++exhaustive;
    for (int a = 0; a < triples; ++a) {
      check_nae(t, NaeInstance{n, {clause(a)}}, limits);
      ++exhaustive;
      for (int b = 0; b < triples; ++b) {
        check_nae(t, NaeInstance{n, {clause(a), clause(b)}}, limits);
        ++exhaustive;
      }
    }
  }
  t.note(std::to_string(exhaustive) + " exhaustive instances");
  std::uniform_int_distribution<int> count(1, 4);
  for (int i = 0; i < 100; ++i) {
    NaeInstance phi;
    phi.variables = count(rng);
    std::uniform_int_distribution<int> var(0, phi.variables - 1);
    const int m = count(rng);
    for (int c = 0; c < m; ++c) phi.clauses.push_back({var(rng), var(rng), var(rng)});
    check_nae(t, phi, limits);
  }
}

void cosets_and_heaps(Tally& t, Rng& rng) {
  const std::vector<std::pair<std::string, GroupTable>> groups = {
      {"C6", cyclic(6)},
      {"C2xC2", direct_product(cyclic(2), cyclic(2))},
      {"D8", dihedral(8)},
      {"C12", cyclic(12)},
      {"D12", dihedral(12)},
  };
  for (const auto& [label, g] : groups) {
    const OperationTable heap = heap_from_group(g);
    for (int k : {1, 2}) {
      const oracle::PowerGroup pg{&g, k};
      const std::uint64_t size = pg.size();
      const auto cosets = oracle::all_cosets(pg);
      // Componentwise heap on codes.
      auto apply = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
        const auto a = pg.decode(x), b = pg.decode(y), c = pg.decode(z);
        std::uint64_t out = 0;
        for (int i = k - 1; i >= 0; --i) {
          const auto s = static_cast<size_t>(i);
          out = out * static_cast<std::uint64_t>(g.order()) + static_cast<std::uint64_t>(heap({a[s], b[s], c[s]}));
        }
        return out;
      };
      for (const auto& c : cosets) {
        const Relation r = oracle::relation_of(pg, c);
        t.expect(is_coset(r, g), [&] { return label + "^" + std::to_string(k) + ": coset rejected"; });
        std::vector<char> in(size, 0);
        for (auto x : c) in[x] = 1;
        bool closed = true;
        for (auto x : c)
          for (auto y : c)
            for (auto z : c)
              if (!in[apply(x, y, z)]) closed = false;
        t.expect(closed, [&] { return label + "^" + std::to_string(k) + ": coset not closed under the heap"; });
      }
      int generated = 0;
      std::uniform_int_distribution<std::uint64_t> pick_size(2, size - 1);
      while (generated < 100) {
        std::vector<std::uint64_t> all(size);
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(pick_size(rng));
        std::sort(all.begin(), all.end());
        if (cosets.count(all)) continue;
        ++generated;
        const Relation r = oracle::relation_of(pg, all);
        t.expect(!is_coset(r, g), [&] { return label + "^" + std::to_string(k) + ": non-coset accepted"; });
        std::vector<char> in(size, 0);
        for (auto x : all) in[x] = 1;
        bool violated = false;
        for (size_t i = 0; i < all.size() && !violated; ++i)
          for (size_t j = 0; j < all.size() && !violated; ++j)
            for (size_t l = 0; l < all.size() && !violated; ++l)
              if (!in[apply(all[i], all[j], all[l])]) violated = true;
        t.expect(violated, [&] { return label + "^" + std::to_string(k) + ": non-coset without violating triple"; });
      }
    }
  }
}

void heap_round_trip(Tally& t, Rng&) {
  std::vector<GroupTable> groups;
  for (Element n = 1; n <= 24; ++n) groups.push_back(cyclic(n));
  for (Element n = 4; n <= 24; n += 2) groups.push_back(dihedral(n));
  const auto c = [](Element n) { return cyclic(n); };
  groups.push_back(direct_product(c(2), c(2)));
  groups.push_back(direct_product(c(2), c(4)));
  groups.push_back(direct_product(direct_product(c(2), c(2)), c(2)));
  groups.push_back(direct_product(c(3), c(3)));
  groups.push_back(direct_product(c(2), c(6)));
  groups.push_back(direct_product(c(2), c(8)));
  groups.push_back(direct_product(c(4), c(4)));
  groups.push_back(direct_product(direct_product(c(2), c(2)), c(4)));
  groups.push_back(direct_product(direct_product(c(2), c(2)), direct_product(c(2), c(2))));
  groups.push_back(direct_product(c(3), c(6)));
  groups.push_back(direct_product(c(2), c(10)));
  groups.push_back(direct_product(direct_product(c(2), c(2)), c(6)));
  groups.push_back(direct_product(c(2), c(12)));
  groups.push_back(direct_product(dihedral(6), c(3)));
  groups.push_back(direct_product(dihedral(6), c(4)));
  groups.push_back(direct_product(dihedral(8), c(2)));
  groups.push_back(direct_product(dihedral(12), c(2)));
  groups.push_back(direct_product(dihedral(6), direct_product(c(2), c(2))));
  groups.push_back(dicyclic_4p(5));
  groups.push_back(cp_c4_faithful(5));
  for (Element n = 1; n <= 12; ++n)
    for (auto& g : enumerate_groups_on_set(n)) groups.push_back(std::move(g));
  long pairs = 0;
  for (const auto& g : groups) {
    t.expect(g.order() <= 24, [] { return std::string("group too large"); });
    const OperationTable heap = heap_from_group(g);
    for (Element e = 0; e < g.order(); ++e) {
      ++pairs;
      t.expect(heap_from_group(group_from_heap(heap, e)) == heap, [&] {
        return "order " + std::to_string(g.order()) + ", e=" + std::to_string(e) + ": heap changed";
      });
    }
  }
  t.note(std::to_string(groups.size()) + " groups, " + std::to_string(pairs) + " identity choices");
}

void maltsev_extension(Tally& t, Rng&) {
  const IdentitySet sigma = maltsev_identities();
  auto chain = [&](const std::string& label, Interpretation ops, Element target, bool retract_to_last) {
    while (ops.at("m").domain() < target) {
      const Element fresh = ops.at("m").domain();
      std::vector<Element> retraction;
      if (retract_to_last) {
        retraction.resize(static_cast<size_t>(fresh) + 1);
        std::iota(retraction.begin(), retraction.end(), 0);
        retraction.back() = fresh - 1;
      }
      const OperationTable before = ops.at("m");
      ops = extend_operations(ops, sigma, fresh, retraction);
      const OperationTable& m = ops.at("m");
      t.expect(m.domain() == fresh + 1, [&] { return label + ": domain did not grow"; });
      t.expect(oracle::maltsev(m), [&] { return label + ": not Maltsev on " + std::to_string(fresh + 1); });
      bool restricts = true;
      for (Element x = 0; x < fresh; ++x)
        for (Element y = 0; y < fresh; ++y)
          for (Element z = 0; z < fresh; ++z)
            if (m({x, y, z}) != before({x, y, z})) restricts = false;
      t.expect(restricts, [&] { return label + ": old values changed"; });
    }
  };
  chain("projection on {0}", {{"m", OperationTable(1, 3, {0})}}, 4, false);
  const auto xor3 = OperationTable::from_function(2, 3, [](std::span<const Element> a) { return a[0] ^ a[1] ^ a[2]; });
  chain("x+y+z on {0,1}", {{"m", xor3}}, 4, false);
  chain("x+y+z on {0,1}, fresh to last", {{"m", xor3}}, 4, true);
}

void indicator_domain_two(Tally& t, Rng&) {
  const IdentitySet sigma = with_idempotence(maltsev_identities());
  auto check = [&](const RelationalStructure& b, const std::string& label) {
    const bool expected = oracle::has_maltsev_on_two(b, true);
    const MetaVerdict v = has_polymorphism(b, sigma);
    t.expect(v.answer == expected, [&] { return label + ": indicator answer differs"; });
    if (v.answer && v.witness) {
      const OperationTable& m = v.witness->at("m");
      t.expect(oracle::maltsev(m) && oracle::preserves(m, b) && m({0, 0, 0}) == 0 && m({1, 1, 1}) == 1,
               [&] { return label + ": witness fails"; });
    }
  };
  auto relation = [](const std::string& name, int arity, unsigned bits) {
    Relation r{name, arity, {}};
    for (unsigned code = 0; code < (1u << arity); ++code)
      if ((bits >> code) & 1) r.add(decode_tuple(code, 2, static_cast<size_t>(arity)));
    return r;
  };
  for (unsigned a = 0; a < 16; ++a) {
    RelationalStructure b(2);
    b.relations.push_back(relation("R", 2, a));
    check(b, "binary " + std::to_string(a));
    for (unsigned c = 0; c < 16; ++c) {
      RelationalStructure b2 = b;
      b2.relations.push_back(relation("S", 2, c));
      check(b2, "binary pair " + std::to_string(a) + "," + std::to_string(c));
    }
  }
  for (unsigned a = 0; a < 256; ++a) {
    RelationalStructure b(2);
    b.relations.push_back(relation("R", 3, a));
    check(b, "ternary " + std::to_string(a));
  }
}

void abelian_heap_pipeline(Tally& t, Rng& rng) {
  std::uniform_int_distribution<Element> dsize(2, 6);
  std::uniform_int_distribution<int> rcount(1, 4), arity(1, 3);
  for (int i = 0; i < 50; ++i) {
    const Element d = dsize(rng);
    RelationalStructure b(d);
    const int k = rcount(rng);
    for (int r = 0; r < k; ++r) {
      Relation rel;
      do {
        rel = oracle::random_abelian_coset(rng, d, arity(rng), 2, "R" + std::to_string(r));
      } while (rel.size() > static_cast<size_t>(2 * d));
      b.relations.push_back(std::move(rel));
    }
    const MetaVerdict v = pmeta_abheap_maltsev(b);
    const bool witnessed = v.answer && v.witness && v.witness->count("m");
    t.expect(witnessed, [&] { return "no answer on Z_" + std::to_string(d) + " structure " + std::to_string(i); });
    if (witnessed) {
      const OperationTable& m = v.witness->at("m");
      t.expect(oracle::maltsev(m) && oracle::preserves(m, b),
               [&] { return "witness fails on structure " + std::to_string(i); });
    }
  }
  std::vector<RelationalStructure> negatives;
  {
    RelationalStructure b(2);
    b.add_relation("R", 2).data = {0, 0, 0, 1, 1, 0};
    negatives.push_back(b);
  }
  std::uniform_int_distribution<int> few(1, 3);
  while (negatives.size() < 21) {
    auto b = oracle::random_structure(rng, 2, few(rng), 3, 0.5);
    if (!oracle::has_maltsev_on_two(b, false)) negatives.push_back(std::move(b));
  }
  for (size_t i = 0; i < negatives.size(); ++i) {
    t.expect(!oracle::has_maltsev_on_two(negatives[i], false), [] { return std::string("certificate failed"); });
    const MetaVerdict v = pmeta_abheap_maltsev(negatives[i]);
    t.expect(!v.answer, [&] { return "yes on non-Maltsev structure " + std::to_string(i); });
  }
}

void check_hnf(Tally& t, const MatrixZ& m, size_t cols) {
  const HermiteForm f = hnf(m, cols);
  const size_t rows = m.size();
  auto show = [&] { return "hnf fails on\n" + to_text(m); };
  t.expect(f.h.size() == rows && f.u.size() == rows, show);
  if (f.h.size() != rows || f.u.size() != rows) return;
  t.expect(multiply(f.u, m) == f.h, show);
  const Integer det = oracle::det(f.u);
  t.expect(det == 1 || det == -1, show);
  bool shape = f.rank <= rows && f.pivots.size() == f.rank;
  for (size_t r = 0; shape && r < rows; ++r) {
    if (r >= f.rank) {
      shape = std::all_of(f.h[r].begin(), f.h[r].end(), [](const Integer& x) { return x == 0; });
      continue;
    }
    const size_t p = f.pivots[r];
    if (p >= cols || (r > 0 && p <= f.pivots[r - 1]) || f.h[r][p] <= 0) {
      shape = false;
      break;
    }
    for (size_t c = 0; c < p; ++c) shape = shape && f.h[r][c] == 0;
    for (size_t i = 0; i < rows; ++i) {
      if (i < r) shape = shape && f.h[i][p] >= 0 && f.h[i][p] < f.h[r][p];
      if (i > r) shape = shape && f.h[i][p] == 0;
    }
  }
  t.expect(shape, show);
}

void affine_relaxation(Tally& t, Rng& rng) {
  std::uniform_int_distribution<int> rcount(1, 3), arity(1, 3);
  std::uniform_int_distribution<Element> asize(2, 4), bsize(2, 3);
  long rejected = 0;
  for (int i = 0; i < 200; ++i) {
    RelationalStructure b(bsize(rng));
    const int k = rcount(rng);
    for (int r = 0; r < k; ++r) {
      const auto one = oracle::random_structure(rng, b.size, 1, 3, 0.5);
      Relation rel = one.relations[0];
      rel.name = "R" + std::to_string(r);
      b.relations.push_back(std::move(rel));
    }
    const RelationalStructure a = random_like(rng, asize(rng), b, 0.3);
    const bool relaxed = aip_decide(a, b);
    const bool hom = oracle::hom_exists(a, b);
    if (!relaxed) ++rejected;
    t.expect(relaxed || !hom, [&] { return "relaxation rejected a solvable pair " + std::to_string(i); });
    t.expect(!hom || relaxed, [&] { return "homomorphism without relaxation solution " + std::to_string(i); });
  }
  t.note(std::to_string(rejected) + " random pairs rejected");
  std::uniform_int_distribution<Element> dsize(2, 4), instance(2, 5);
  long unsat = 0;
  for (int i = 0; i < 100; ++i) {
    const Element d = dsize(rng);
    RelationalStructure b(d);
    const int k = rcount(rng);
    for (int r = 0; r < k; ++r)
      b.relations.push_back(oracle::random_abelian_coset(rng, d, arity(rng), 2, "R" + std::to_string(r)));
    const RelationalStructure a = random_like(rng, instance(rng), b, 0.25);
    const bool hom = oracle::hom_exists(a, b);
    if (!hom) ++unsat;
    t.expect(aip_decide(a, b) == hom, [&] { return "coset template pair " + std::to_string(i) + " differs"; });
  }
  t.note(std::to_string(unsat) + " coset pairs without homomorphism");
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9), coin(0, 3);
  for (int i = 0; i < 100; ++i) {
    const size_t rows = static_cast<size_t>(dim(rng)), cols = static_cast<size_t>(dim(rng));
    MatrixZ m(rows, VectorZ(cols));
    for (auto& row : m)
      for (auto& x : row) x = coin(rng) == 0 ? 0 : entry(rng);
    if (rows > 1 && coin(rng) == 0) {
      // Dependent row.
      for (size_t c = 0; c < cols; ++c) m[rows - 1][c] = 2 * m[0][c] - m[1 % rows][c];
    }
    check_hnf(t, m, cols);
  }
}

std::vector<GroupTable> groups_of_order(Element n) {
  std::vector<GroupTable> out{cyclic(n)};
  if (n == 4) out.push_back(direct_product(cyclic(2), cyclic(2)));
  return out;
}

void fresh_element(Tally& t, Rng& rng) {
  std::uniform_int_distribution<Element> size(2, 4);
  std::uniform_int_distribution<int> rcount(1, 3);
  for (int i = 0; i < 50; ++i) {
    const RelationalStructure a = oracle::random_structure(rng, size(rng), rcount(rng), 2, 0.5);
    const RelationalStructure b = add_fresh_element(a);
    t.expect(b.size == a.size + 1, [] { return std::string("fresh element missing"); });
    const MetaVerdict v = has_coset_polymorphism(b);
    t.expect(!v.answer, [&] { return "coset polymorphism found for structure " + std::to_string(i); });
    for (const auto& g : groups_of_order(b.size)) {
      t.expect(!coset_labelling(b, g), [&] { return "labelling found for structure " + std::to_string(i); });
      std::map<int, std::set<std::vector<std::uint64_t>>> cosets;
      for (const auto& r : b.relations)
        if (!cosets.count(r.arity)) cosets[r.arity] = oracle::all_cosets(oracle::PowerGroup{&g, r.arity});
      std::vector<Element> perm(static_cast<size_t>(b.size));
      std::iota(perm.begin(), perm.end(), 0);
      bool found = false;
      do {
        bool all = true;
        for (const auto& r : b.relations) {
          Relation image{r.name, r.arity, {}};
          for (Element x : r.data) image.data.push_back(perm[static_cast<size_t>(x)]);
          if (!cosets[r.arity].count(codes_of(image, g.order()))) {
            all = false;
            break;
          }
        }
        found = found || all;
      } while (!found && std::next_permutation(perm.begin(), perm.end()));
      t.expect(!found, [&] { return "brute-force labelling found for structure " + std::to_string(i); });
    }
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget;
  void (*run)(Tally&, Rng&);
};

const Criterion kCriteria[] = {
    {1, "dihedral order-two cosets match brute force", 1, dihedral_cosets},
    {2, "coset graph shape of dihedral groups", 1, coset_graph_shape},
    {3, "graph decomposition vs coset polymorphism", 600, graph_pipeline},
    {4, "NAE-3SAT reduction vs decomposition", 120, nae_pipeline},
    {5, "cosets are exactly the heap-closed relations", 60, cosets_and_heaps},
    {6, "heap and group round trip", 60, heap_round_trip},
    {7, "Maltsev operations extend to fresh elements", 1, maltsev_extension},
    {8, "indicator vs idempotent ternary operations on {0,1}", 60, indicator_domain_two},
    {9, "abelian heap pipeline on coset and non-Maltsev structures", 300, abelian_heap_pipeline},
    {10, "affine integer relaxation and Hermite form", 300, affine_relaxation},
    {11, "fresh element rules out coset polymorphisms", 60, fresh_element},
};

}  // namespace

std::vector<int> criterion_ids() {
  std::vector<int> ids;
  for (const auto& c : kCriteria) ids.push_back(c.id);
  return ids;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  const Criterion* c = nullptr;
  for (const auto& k : kCriteria)
    if (k.id == id) c = &k;
  if (!c) throw InvalidArgument("no criterion " + std::to_string(id));
  CriterionResult result{c->id, c->name, false, {}, 0, c->budget};
  Rng rng(options.seed + static_cast<std::uint64_t>(id));
  Tally tally;
  const auto start = std::chrono::steady_clock::now();
  try {
    c->run(tally, rng);
    result.passed = tally.ok();
    result.detail = tally.summary();
  } catch (const std::exception& e) {
    result.detail = tally.summary() + "; exception: " + e.what();
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.passed && result.seconds > result.budget_seconds) {
    result.passed = false;
    result.detail += "; over the time budget";
  }
  return result;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id : criterion_ids()) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end())
      continue;
    out.push_back(run_criterion(id, options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  char time[64];
  std::snprintf(time, sizeof time, "%.2fs of %.0fs", r.seconds, r.budget_seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + time +
         "): " + r.detail;
}

}  // namespace polymeta::selftest
