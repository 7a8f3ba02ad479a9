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

#include "polymeta/meta.hpp"

#include <algorithm>
#include <numeric>

#include "polymeta/aip.hpp"
#include "polymeta/error.hpp"

namespace polymeta {
namespace {

using std::size_t;

void require_ternary(const OperationTable& m) {
  if (m.arity() != 3) throw InvalidArgument("expected a ternary operation, got arity " + std::to_string(m.arity()));
}

// Value of m at (x, y, z), reading the table directly.
struct Ternary {
  const OperationTable& m;
  size_t n;
  Element operator()(Element x, Element y, Element z) const {
    return m.at(static_cast<size_t>(x) + n * (static_cast<size_t>(y) + n * static_cast<size_t>(z)));
  }
};

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

void collect_vars(const Term& t, std::vector<int>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.var) == out.end()) out.push_back(t.var);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, out);
}

}  // namespace

bool is_maltsev(const OperationTable& m) {
  require_ternary(m);
  const Ternary f{m, static_cast<size_t>(m.domain())};
  for (Element x = 0; x < m.domain(); ++x)
    for (Element y = 0; y < m.domain(); ++y)
      if (f(x, x, y) != y || f(y, x, x) != y) return false;
  return true;
}

bool is_heap(const OperationTable& m) {
  if (!is_maltsev(m)) return false;
  const Ternary f{m, static_cast<size_t>(m.domain())};
  const Element n = m.domain();
  for (Element u = 0; u < n; ++u)
    for (Element x = 0; x < n; ++x)
      for (Element v = 0; v < n; ++v) {
        const Element uxv = f(u, x, v);
        for (Element y = 0; y < n; ++y)
          for (Element w = 0; w < n; ++w)
            if (f(u, x, f(v, y, w)) != f(uxv, y, w)) return false;
      }
  return true;
}

bool is_abelian_heap(const OperationTable& m) {
  if (!is_heap(m)) return false;
  const Ternary f{m, static_cast<size_t>(m.domain())};
  for (Element x = 0; x < m.domain(); ++x)
    for (Element y = 0; y < m.domain(); ++y)
      for (Element z = 0; z < m.domain(); ++z)
        if (f(x, y, z) != f(z, y, x)) return false;
  return true;
}

Interpretation Indicator::decode(std::span<const Element> map) const {
  Interpretation ops;
  for (const auto& c : copies) {
    const size_t count = static_cast<size_t>(checked_pow(static_cast<std::uint64_t>(values), c.arity, UINT64_MAX - 1));
    std::vector<Element> table(map.begin() + c.offset, map.begin() + c.offset + static_cast<long>(count));
    ops.emplace(c.symbol, OperationTable(values, c.arity, std::move(table)));
  }
  return ops;
}

Indicator indicator_structure(const RelationalStructure& b, const IdentitySet& sigma, const Limits& limits) {
  if (!classify(sigma).linear) throw InvalidArgument("indicator structures need a linear identity set");
  if (b.size < 1) throw InvalidArgument("empty template");
  Indicator ind;
  ind.values = b.size;
  ind.target = add_singleton_relations(b);

  std::uint64_t total = 0;
  for (const auto& s : sigma.symbols) {
    total += checked_pow(static_cast<std::uint64_t>(b.size), s.arity, limits.indicator_elements);
    if (total > limits.indicator_elements)
      throw LimitExceeded("indicator structure would exceed " + std::to_string(limits.indicator_elements) + " elements");
  }

  auto& inst = ind.instance;
  for (const auto& r : ind.target.relations) inst.add_relation(r.name, r.arity);
  auto rel = [&](std::string_view name) -> Relation& {
    for (auto& r : inst.relations)
      if (r.name == name) return r;
    throw InvalidArgument("missing relation");
  };

  Element offset = 0;
  for (const auto& s : sigma.symbols) {
    ind.copies.push_back({s.name, s.arity, offset});
    const RelationalStructure p = power(b, s.arity, limits);
    for (size_t i = 0; i < p.relations.size(); ++i) {
      Relation& dst = rel(p.relations[i].name);
      dst.data.reserve(dst.data.size() + p.relations[i].data.size());
      for (Element v : p.relations[i].data) dst.data.push_back(v + offset);
    }
    offset += p.size;
  }
  inst.size = offset;

  auto element = [&](const Term& t, const std::vector<Element>& alpha) -> Element {
    for (const auto& c : ind.copies) {
      if (c.symbol != t.symbol) continue;
      std::uint64_t code = 0, scale = 1;
      for (const auto& a : t.args) {
        code += static_cast<std::uint64_t>(alpha[static_cast<size_t>(a.var)]) * scale;
        scale *= static_cast<std::uint64_t>(b.size);
      }
      return c.offset + static_cast<Element>(code);
    }
    throw InvalidArgument("undeclared symbol " + t.symbol);
  };

  Relation& eq = rel(kEqualityRelation);
  std::vector<Relation*> singleton;
  for (Element v = 0; v < b.size; ++v) singleton.push_back(&rel(singleton_relation_name(v)));

  for (const auto& id : sigma.identities) {
    std::vector<int> vars;
    collect_vars(id.lhs, vars);
    collect_vars(id.rhs, vars);
    std::vector<Element> alpha(26, 0);
    const std::uint64_t count = checked_pow(static_cast<std::uint64_t>(b.size), static_cast<int>(vars.size()), UINT64_MAX - 1);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::uint64_t c = code;
      for (int v : vars) {
        alpha[static_cast<size_t>(v)] = static_cast<Element>(c % static_cast<std::uint64_t>(b.size));
        c /= static_cast<std::uint64_t>(b.size);
      }
      const bool lv = id.lhs.is_variable(), rv = id.rhs.is_variable();
      if (lv && rv) {
        if (alpha[static_cast<size_t>(id.lhs.var)] != alpha[static_cast<size_t>(id.rhs.var)]) ind.contradictory = true;
      } else if (lv || rv) {
        const Term& app = lv ? id.rhs : id.lhs;
        const Term& var = lv ? id.lhs : id.rhs;
        singleton[static_cast<size_t>(alpha[static_cast<size_t>(var.var)])]->add({element(app, alpha)});
      } else {
        const Element x = element(id.lhs, alpha), y = element(id.rhs, alpha);
        if (x != y) eq.add({x, y});
      }
    }
  }
  if (ind.contradictory) {
    const Element dummy = inst.size++;
    singleton[0]->add({dummy});
    singleton[1]->add({dummy});
  }
  for (auto& r : inst.relations) r.normalize();
  return ind;
}

bool is_valid_witness(const Interpretation& ops, const RelationalStructure& b, const IdentitySet& sigma) {
  for (const auto& s : sigma.symbols) {
    auto it = ops.find(s.name);
    if (it == ops.end() || it->second.arity() != s.arity || it->second.domain() != b.size) return false;
    if (!is_polymorphism(it->second, b)) return false;
  }
  return satisfies(ops, sigma, b.size);
}

MetaVerdict has_polymorphism(const RelationalStructure& b, const IdentitySet& sigma, const Limits& limits) {
  const Indicator ind = indicator_structure(b, sigma, limits);
  MetaVerdict v;
  if (ind.contradictory) return v;
  auto h = hom_search(ind.instance, ind.target);
  if (!h) return v;
  Interpretation ops = ind.decode(h->map);
  if (!is_valid_witness(ops, b, sigma)) throw Error("indicator homomorphism decoded to an invalid witness");
  v.answer = true;
  v.witness = std::move(ops);
  return v;
}

namespace {

// Dynamic bitset over at most a few hundred vertices.
class Bits {
 public:
  explicit Bits(size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  Bits& operator&=(const Bits& o) {
    for (size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  template <class F>
  void for_each(F&& f) const {
    for (size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t x = words_[w]; x; x &= x - 1) f(w * 64 + static_cast<size_t>(std::countr_zero(x)));
  }

 private:
  std::vector<std::uint64_t> words_;
};

// Injective embedding of `pattern` (as a subgraph, not necessarily induced)
// into `host`. The first vertex may be fixed to `anchor` when the host is
// vertex-transitive.
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host, std::optional<int> anchor)
      : pattern_(pattern.adjacency()), host_n_(static_cast<size_t>(host.vertices)), anchor_(anchor) {
    host_adj_.assign(host_n_, Bits(host_n_));
    std::vector<int> host_deg(host_n_, 0);
    for (auto [u, v] : host.edges) {
      host_adj_[static_cast<size_t>(u)].set(static_cast<size_t>(v));
      host_adj_[static_cast<size_t>(v)].set(static_cast<size_t>(u));
      ++host_deg[static_cast<size_t>(u)];
      ++host_deg[static_cast<size_t>(v)];
    }
    // Components by decreasing density, breadth-first from the highest
    // degree vertex.
    const size_t n = pattern_.size();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> comps;
    for (size_t s = 0; s < n; ++s) {
      if (comp[s] >= 0 || pattern_[s].empty()) continue;
      std::vector<int> members{static_cast<int>(s)};
      comp[s] = static_cast<int>(comps.size());
      for (size_t q = 0; q < members.size(); ++q)
        for (int v : pattern_[static_cast<size_t>(members[q])])
          if (comp[static_cast<size_t>(v)] < 0) {
            comp[static_cast<size_t>(v)] = static_cast<int>(comps.size());
            members.push_back(v);
          }
      comps.push_back(std::move(members));
    }
    auto density = [&](const std::vector<int>& c) {
      size_t e = 0;
      for (int v : c) e += pattern_[static_cast<size_t>(v)].size();
      return static_cast<double>(e) / static_cast<double>(c.size());
    };
    std::stable_sort(comps.begin(), comps.end(),
                     [&](const auto& a, const auto& b) { return density(a) > density(b); });
    std::vector<char> placed(n, 0);
    for (const auto& c : comps) {
      int root = c.front();
      for (int v : c)
        if (pattern_[static_cast<size_t>(v)].size() > pattern_[static_cast<size_t>(root)].size()) root = v;
      size_t start = order_.size();
      order_.push_back(root);
      placed[static_cast<size_t>(root)] = 1;
      for (size_t q = start; q < order_.size(); ++q) {
        std::vector<int> next;
        for (int v : pattern_[static_cast<size_t>(order_[q])])
          if (!placed[static_cast<size_t>(v)]) {
            placed[static_cast<size_t>(v)] = 1;
            next.push_back(v);
          }
        std::stable_sort(next.begin(), next.end(), [&](int a, int b) {
          return pattern_[static_cast<size_t>(a)].size() > pattern_[static_cast<size_t>(b)].size();
        });
        order_.insert(order_.end(), next.begin(), next.end());
      }
    }
    degree_ok_.assign(n, Bits(host_n_));
    for (size_t v = 0; v < n; ++v)
      for (size_t h = 0; h < host_n_; ++h)
        if (static_cast<size_t>(host_deg[h]) >= pattern_[v].size()) degree_ok_[v].set(h);
  }

  std::optional<std::vector<int>> run() {
    if (pattern_.size() > host_n_) return std::nullopt;
    image_.assign(pattern_.size(), -1);
    Bits free(host_n_);
    for (size_t h = 0; h < host_n_; ++h) free.set(h);
    if (!place(0, free)) return std::nullopt;
    return image_;
  }

 private:
  bool place(size_t k, Bits& free) {
    if (k == order_.size()) return true;
    const int v = order_[k];
    Bits cand = degree_ok_[static_cast<size_t>(v)];
    cand &= free;
    for (int u : pattern_[static_cast<size_t>(v)])
      if (image_[static_cast<size_t>(u)] >= 0) cand &= host_adj_[static_cast<size_t>(image_[static_cast<size_t>(u)])];
    if (k == 0 && anchor_) {
      if (!cand.test(static_cast<size_t>(*anchor_))) return false;
      cand = Bits(host_n_);
      cand.set(static_cast<size_t>(*anchor_));
    }
    bool ok = false;
    cand.for_each([&](size_t h) {
      if (ok) return;
      image_[static_cast<size_t>(v)] = static_cast<int>(h);
      free.reset(h);
      if (place(k + 1, free)) ok = true;
      free.set(h);
      if (!ok) image_[static_cast<size_t>(v)] = -1;
    });
    return ok;
  }

  std::vector<std::vector<int>> pattern_;
  size_t host_n_;
  std::optional<int> anchor_;
  std::vector<Bits> host_adj_;
  std::vector<Bits> degree_ok_;
  std::vector<int> order_;
  std::vector<int> image_;
};

// Extends a partial injection to a bijection by filling unused images in
// ascending order.
std::vector<Element> complete_bijection(const std::vector<int>& partial, Element n) {
  std::vector<Element> phi(static_cast<size_t>(n), -1);
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (size_t v = 0; v < partial.size(); ++v)
    if (partial[v] >= 0) {
      phi[v] = partial[v];
      used[static_cast<size_t>(partial[v])] = 1;
    }
  Element next = 0;
  for (auto& x : phi) {
    if (x >= 0) continue;
    while (used[static_cast<size_t>(next)]) ++next;
    x = next;
    used[static_cast<size_t>(next)] = 1;
  }
  return phi;
}

// Group on b's domain transported along phi (domain element -> group element).
GroupTable transport(const GroupTable& g, const std::vector<Element>& phi) {
  std::vector<Element> inverse(phi.size());
  for (size_t x = 0; x < phi.size(); ++x) inverse[static_cast<size_t>(phi[x])] = static_cast<Element>(x);
  return relabel(g, inverse);
}

MetaVerdict coset_verdict(const RelationalStructure& b, const GroupTable& g, const std::vector<Element>& phi) {
  GroupTable local = transport(g, phi);
  OperationTable heap = heap_from_group(local);
  if (!is_heap(heap) || !is_polymorphism(heap, b)) throw Error("coset search produced an invalid heap witness");
  MetaVerdict v;
  v.answer = true;
  v.witness = Interpretation{{"m", std::move(heap)}};
  v.group = std::move(local);
  return v;
}

bool structural_case(const RelationalStructure& b) {
  if (b.size % 4 != 0 || b.size / 4 < 5 || !is_prime(b.size / 4)) return false;
  return std::all_of(b.relations.begin(), b.relations.end(),
                     [](const Relation& r) { return r.arity == 1 && r.size() <= 2; });
}

// Coset search through bijections into a fixed group.
class CosetSearch {
 public:
  CosetSearch(const RelationalStructure& b, const GroupTable& g) : b_(b), g_(g), n_(b.size) {
    for (const auto& r : b.relations) {
      if (r.empty()) continue;
      rels_.push_back(&r);
    }
    // Visit elements by how often they occur.
    std::vector<size_t> freq(static_cast<size_t>(n_), 0);
    for (const Relation* r : rels_)
      for (Element v : r->data) ++freq[static_cast<size_t>(v)];
    order_.resize(static_cast<size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Element x, Element y) { return freq[static_cast<size_t>(x)] > freq[static_cast<size_t>(y)]; });
    position_.resize(static_cast<size_t>(n_));
    for (size_t i = 0; i < order_.size(); ++i) position_[static_cast<size_t>(order_[i])] = i;
    // Tuples become fully assigned at the position of their last coordinate.
    completes_at_.resize(order_.size());
    for (size_t ri = 0; ri < rels_.size(); ++ri) {
      const Relation& r = *rels_[ri];
      for (size_t t = 0; t < r.size(); ++t) {
        size_t last = 0;
        for (Element v : r.tuple(t)) last = std::max(last, position_[static_cast<size_t>(v)]);
        completes_at_[last].push_back({ri, t});
      }
    }
  }

  std::optional<std::vector<Element>> run() {
    // A coset in G^k has size dividing |G|^k.
    for (const Relation* r : rels_) {
      std::uint64_t rest = r->size();
      for (int c = 0; c < r->arity && rest > 1; ++c) {
        std::uint64_t gcd;
        while ((gcd = std::gcd(rest, static_cast<std::uint64_t>(n_))) > 1) rest /= gcd;
      }
      if (rest != 1) return std::nullopt;
    }
    phi_.assign(static_cast<size_t>(n_), -1);
    used_.assign(static_cast<size_t>(n_), 0);
    assigned_.assign(rels_.size(), {});
    if (!assign(0)) return std::nullopt;
    return phi_;
  }

 private:
  bool assign(size_t k) {
    if (k == order_.size()) return true;
    const Element x = order_[k];
    // Left translations act transitively, so the first element may be the
    // identity.
    for (Element y = 0; y < n_; ++y) {
      if (used_[static_cast<size_t>(y)]) continue;
      if (k == 0 && y != g_.identity()) continue;
      phi_[static_cast<size_t>(x)] = y;
      used_[static_cast<size_t>(y)] = 1;
      std::vector<size_t> touched;
      bool ok = true;
      for (auto [ri, t] : completes_at_[k]) {
        assigned_[ri].push_back(t);
        touched.push_back(ri);
        if (ok && !still_possible(ri)) ok = false;
      }
      if (ok && assign(k + 1)) return true;
      for (size_t ri : touched) assigned_[ri].pop_back();
      used_[static_cast<size_t>(y)] = 0;
      phi_[static_cast<size_t>(x)] = -1;
    }
    return false;
  }

  // The images of the assigned tuples, translated by the first one, must
  // generate a subgroup no larger than the relation; once all tuples are
  // placed the image must be a coset.
  bool still_possible(size_t ri) const {
    const Relation& r = *rels_[ri];
    const auto& ts = assigned_[ri];
    const size_t k = static_cast<size_t>(r.arity);
    if (ts.size() == r.size()) {
      Relation img{r.name, r.arity, {}};
      for (size_t t : ts)
        for (Element v : r.tuple(t)) img.data.push_back(phi_[static_cast<size_t>(v)]);
      return is_coset(img, g_);
    }
    if (ts.size() < 2) return true;
    std::vector<Element> y(k);
    for (size_t c = 0; c < k; ++c) y[c] = g_.inv(phi_[static_cast<size_t>(r.tuple(ts[0])[c])]);
    auto encode = [&](const std::vector<Element>& t) {
      std::uint64_t code = 0;
      for (size_t c = k; c-- > 0;) code = code * static_cast<std::uint64_t>(n_) + static_cast<std::uint64_t>(t[c]);
      return code;
    };
    std::vector<std::vector<Element>> gens;
    for (size_t i = 1; i < ts.size(); ++i) {
      std::vector<Element> t(k);
      for (size_t c = 0; c < k; ++c) t[c] = g_.mul(y[c], phi_[static_cast<size_t>(r.tuple(ts[i])[c])]);
      gens.push_back(std::move(t));
    }
    // Bounded closure under right multiplication by the generators.
    std::vector<std::vector<Element>> elems{std::vector<Element>(k, g_.identity())};
    std::vector<std::uint64_t> seen{encode(elems.front())};
    for (size_t q = 0; q < elems.size(); ++q) {
      for (const auto& gen : gens) {
        std::vector<Element> p(k);
        for (size_t c = 0; c < k; ++c) p[c] = g_.mul(elems[q][c], gen[c]);
        const std::uint64_t code = encode(p);
        if (std::find(seen.begin(), seen.end(), code) != seen.end()) continue;
        if (seen.size() == r.size()) return false;
        seen.push_back(code);
        elems.push_back(std::move(p));
      }
    }
    return r.size() % seen.size() == 0;
  }

  const RelationalStructure& b_;
  const GroupTable& g_;
  Element n_;
  std::vector<const Relation*> rels_;
  std::vector<Element> order_;
  std::vector<size_t> position_;
  std::vector<std::vector<std::pair<size_t, size_t>>> completes_at_;
  std::vector<Element> phi_;
  std::vector<char> used_;
  std::vector<std::vector<size_t>> assigned_;
};

}  // namespace

std::optional<std::vector<Element>> coset_labelling(const RelationalStructure& b, const GroupTable& g) {
  if (b.size != g.order()) return std::nullopt;
  for (const auto& r : b.relations)
    for (Element v : r.data)
      if (v < 0 || v >= b.size) throw InvalidArgument("relation " + r.name + " leaves the domain");
  return CosetSearch(b, g).run();
}

MetaVerdict has_coset_polymorphism(const RelationalStructure& b, const Limits& limits) {
  if (b.size < 1) throw InvalidArgument("empty structure");
  if (structural_case(b)) {
    std::vector<Edge> edges;
    for (const auto& r : b.relations)
      if (r.size() == 2 && r.data[0] != r.data[1]) edges.emplace_back(r.data[0], r.data[1]);
    const Graph pattern = Graph::from_edges(b.size, std::move(edges));
    for (const auto& [label, g] : order_4p_candidates(b.size / 4)) {
      auto image = EmbeddingSearch(pattern, coset_graph(g), g.identity()).run();
      if (image) return coset_verdict(b, g, complete_bijection(*image, b.size));
    }
    return {};
  }
  if (static_cast<std::uint64_t>(b.size) > limits.group_search)
    throw LimitExceeded("coset search is limited to " + std::to_string(limits.group_search) + " elements");
  MetaVerdict verdict;
  Limits lim = limits;
  lim.enumerate_order = std::max<std::uint64_t>(lim.enumerate_order, static_cast<std::uint64_t>(b.size));
  enumerate_groups_on_set(
      b.size,
      [&](const GroupTable& g) {
        auto phi = coset_labelling(b, g);
        if (!phi) return true;
        verdict = coset_verdict(b, g, *phi);
        return false;
      },
      lim);
  return verdict;
}

namespace {

class RerunSession : public SolverSession {
 public:
  RerunSession(const RelationalStructure& a, const RelationalStructure& b, UniformSolver solver)
      : a_(a), b_(b), solver_(std::move(solver)) {}

  bool accepts() override { return solver_(a_, b_); }

  bool try_pin(Element v, Element value) override {
    RelationalStructure next = a_;
    Relation* r = nullptr;
    const std::string name = singleton_relation_name(value);
    for (auto& rel : next.relations)
      if (rel.name == name) r = &rel;
    if (!r) throw InvalidArgument("instance has no relation " + name);
    r->add({v});
    r->normalize();
    if (!solver_(next, b_)) return false;
    a_ = std::move(next);
    return true;
  }

 private:
  RelationalStructure a_;
  const RelationalStructure& b_;
  UniformSolver solver_;
};

class AipSessionAdapter : public SolverSession {
 public:
  AipSessionAdapter(const RelationalStructure& a, const RelationalStructure& b) : s_(a, b) {}
  bool accepts() override { return s_.feasible(); }
  bool try_pin(Element v, Element value) override { return s_.try_pin(v, value); }

 private:
  AipSession s_;
};

}  // namespace

SessionFactory session_from_solver(UniformSolver solver) {
  return [solver = std::move(solver)](const RelationalStructure& a, const RelationalStructure& b) {
    return std::unique_ptr<SolverSession>(new RerunSession(a, b, solver));
  };
}

SessionFactory aip_sessions() {
  return [](const RelationalStructure& a, const RelationalStructure& b) {
    return std::unique_ptr<SolverSession>(new AipSessionAdapter(a, b));
  };
}

MetaVerdict pcreameta_generic(const RelationalStructure& b, const IdentitySet& sigma, const SessionFactory& solver,
                              const Limits& limits) {
  const IdentitySet full = with_idempotence(sigma);
  const Indicator ind = indicator_structure(b, full, limits);
  auto session = solver(ind.instance, ind.target);
  MetaVerdict v;
  if (!session->accepts()) return v;
  std::vector<Element> map(static_cast<size_t>(ind.instance.size), 0);
  for (Element x = 0; x < ind.instance.size; ++x) {
    bool fixed = false;
    for (Element value = 0; value < b.size && !fixed; ++value) {
      if (session->try_pin(x, value)) {
        map[static_cast<size_t>(x)] = value;
        fixed = true;
      }
    }
    if (!fixed) {
      v.promise_violation = true;
      return v;
    }
  }
  v.answer = true;
  v.witness = ind.decode(map);
  v.promise_violation = !is_valid_witness(*v.witness, b, sigma);
  return v;
}

MetaVerdict pcreameta_generic(const RelationalStructure& b, const IdentitySet& sigma, const UniformSolver& solver,
                              const Limits& limits) {
  return pcreameta_generic(b, sigma, session_from_solver(solver), limits);
}

MetaVerdict pmeta_generic(const RelationalStructure& b, const IdentitySet& sigma, const SessionFactory& solver,
                          const Limits& limits) {
  MetaVerdict v = pcreameta_generic(b, sigma, solver, limits);
  if (v.answer && v.promise_violation) {
    v.answer = false;
    v.witness.reset();
  }
  return v;
}

MetaVerdict pmeta_generic(const RelationalStructure& b, const IdentitySet& sigma, const UniformSolver& solver,
                          const Limits& limits) {
  return pmeta_generic(b, sigma, session_from_solver(solver), limits);
}

MetaVerdict pmeta_abheap_maltsev(const RelationalStructure& b, const Limits& limits) {
  return pmeta_generic(b, maltsev_identities(), aip_sessions(), limits);
}

bool uniform_solve_via_witness(const RelationalStructure& a, const RelationalStructure& b,
                               const Interpretation& witness, const IdentitySet& sigma, const UniformSolver& solver) {
  if (!is_valid_witness(witness, b, sigma)) throw InvalidArgument("witness is not a valid polymorphism interpretation");
  if (solver) return solver(a, b);
  return hom_search(a, b).has_value();
}

}  // namespace polymeta
