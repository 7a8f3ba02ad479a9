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

#include "polymeta/structure.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "polymeta/error.hpp"

namespace polymeta {

bool Signature::same_as(const Signature& other) const {
  auto key = [](const Signature& s) {
    std::map<std::string, int> m;
    for (const auto& e : s.entries) m.emplace(e.name, e.arity);
    return m;
  };
  return entries.size() == other.entries.size() && key(*this) == key(other);
}

void Relation::normalize() {
  if (arity <= 0) return;
  const auto n = size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  auto less = [&](std::size_t a, std::size_t b) {
    auto ta = tuple(a), tb = tuple(b);
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
  };
  std::sort(idx.begin(), idx.end(), less);
  std::vector<Element> out;
  out.reserve(data.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && !less(idx[k - 1], idx[k])) continue;
    auto t = tuple(idx[k]);
    out.insert(out.end(), t.begin(), t.end());
  }
  data = std::move(out);
}

Relation& RelationalStructure::add_relation(std::string name, int arity) {
  relations.push_back(Relation{std::move(name), arity, {}});
  return relations.back();
}

const Relation* RelationalStructure::find(std::string_view name) const {
  for (const auto& r : relations)
    if (r.name == name) return &r;
  return nullptr;
}

Signature RelationalStructure::signature() const {
  Signature s;
  for (const auto& r : relations) s.entries.push_back({r.name, r.arity});
  return s;
}

std::uint64_t RelationalStructure::representation_size() const {
  std::uint64_t total = static_cast<std::uint64_t>(size) + relations.size();
  for (const auto& r : relations) total += r.data.size();
  return total;
}

std::vector<Violation> validate(const RelationalStructure& s) {
  std::vector<Violation> out;
  if (s.size <= 0) out.push_back({"", std::nullopt, "domain size must be positive"});
  std::set<std::string> names;
  for (const auto& r : s.relations) {
    if (!names.insert(r.name).second)
      out.push_back({r.name, std::nullopt, "duplicate relation name"});
    if (r.arity < 1) {
      out.push_back({r.name, std::nullopt, "arity must be at least 1"});
      continue;
    }
    if (r.data.size() % static_cast<std::size_t>(r.arity) != 0) {
      out.push_back({r.name, r.size(), "arity mismatch"});
      continue;
    }
    for (std::size_t i = 0; i < r.size(); ++i)
      for (Element x : r.tuple(i))
        if (x < 0 || x >= s.size)
          out.push_back({r.name, i, "coordinate " + std::to_string(x) + " out of domain"});
    Relation sorted = r;
    sorted.normalize();
    if (sorted.size() != r.size()) out.push_back({r.name, std::nullopt, "duplicate tuple"});
  }
  return out;
}

TupleSet::TupleSet(const Relation& r) : arity_(r.arity) {
  Relation copy = r;
  copy.normalize();
  count_ = copy.size();
  data_ = std::move(copy.data);
}

bool TupleSet::contains(std::span<const Element> t) const {
  if (static_cast<int>(t.size()) != arity_ || count_ == 0) return false;
  std::size_t lo = 0, hi = count_;
  const auto a = static_cast<std::size_t>(arity_);
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    const Element* row = data_.data() + mid * a;
    int cmp = 0;
    for (std::size_t i = 0; i < a && cmp == 0; ++i) cmp = row[i] < t[i] ? -1 : (row[i] > t[i] ? 1 : 0);
    if (cmp == 0) return true;
    if (cmp < 0)
      lo = mid + 1;
    else
      hi = mid;
  }
  return false;
}

std::uint64_t encode_tuple(std::span<const Element> t, std::uint64_t base) {
  std::uint64_t code = 0;
  for (std::size_t i = t.size(); i-- > 0;) code = code * base + static_cast<std::uint64_t>(t[i]);
  return code;
}

std::vector<Element> decode_tuple(std::uint64_t code, std::uint64_t base, std::size_t length) {
  std::vector<Element> t(length);
  for (std::size_t i = 0; i < length; ++i) {
    t[i] = static_cast<Element>(code % base);
    code /= base;
  }
  return t;
}

namespace {

// Saturating integer power; returns nullopt once `cap` is exceeded.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, int exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  return r <= cap ? std::optional(r) : std::nullopt;
}

}  // namespace

RelationalStructure power(const RelationalStructure& a, int m, const Limits& limits) {
  if (m < 1) throw InvalidArgument("power exponent must be positive");
  const auto n = static_cast<std::uint64_t>(a.size);
  auto domain = checked_pow(n, m, limits.power_domain);
  if (!domain)
    throw LimitExceeded("power: |A|^m exceeds the domain bound of " +
                        std::to_string(limits.power_domain));
  std::uint64_t total_tuples = 0;
  for (const auto& r : a.relations) {
    auto c = checked_pow(r.size(), m, limits.power_tuples);
    if (!c || (total_tuples += *c) > limits.power_tuples)
      throw LimitExceeded("power: tuple count exceeds the bound of " +
                          std::to_string(limits.power_tuples));
  }

  RelationalStructure out(static_cast<Element>(*domain));
  std::vector<Element> column(static_cast<std::size_t>(m));
  for (const auto& r : a.relations) {
    auto& pr = out.add_relation(r.name, r.arity);
    const std::size_t count = r.size();
    if (count == 0) continue;
    pr.data.reserve(*checked_pow(count, m, limits.power_tuples) * static_cast<std::size_t>(r.arity));
    // choice[j] selects the tuple of R used in coordinate j of the power.
    std::vector<std::size_t> choice(static_cast<std::size_t>(m), 0);
    while (true) {
      for (int pos = 0; pos < r.arity; ++pos) {
        for (int j = 0; j < m; ++j) column[j] = r.tuple(choice[j])[pos];
        pr.data.push_back(static_cast<Element>(encode_tuple(column, n)));
      }
      std::size_t j = 0;
      while (j < choice.size() && ++choice[j] == count) choice[j++] = 0;
      if (j == choice.size()) break;
    }
  }
  return out;
}

namespace {

class Searcher {
 public:
  Searcher(const RelationalStructure& a, const RelationalStructure& b)
      : vars_(static_cast<std::size_t>(a.size)),
        vals_(static_cast<std::size_t>(b.size)),
        words_((vals_ + 63) / 64),
        var_constraints_(vars_) {
    std::vector<std::set<int>> neighbours(vars_);
    for (const auto& ra : a.relations) {
      const Relation* rb = b.find(ra.name);
      for (std::size_t i = 0; i < ra.size(); ++i) {
        Constraint c;
        auto t = ra.tuple(i);
        c.scope.assign(t.begin(), t.end());
        c.target = rb;
        c.first.resize(c.scope.size());
        for (std::size_t p = 0; p < c.scope.size(); ++p) {
          c.first[p] = p;
          for (std::size_t q = 0; q < p; ++q)
            if (c.scope[q] == c.scope[p]) {
              c.first[p] = q;
              break;
            }
        }
        const auto id = static_cast<int>(constraints_.size());
        std::set<int> distinct(c.scope.begin(), c.scope.end());
        for (int v : distinct) var_constraints_[v].push_back(id);
        for (int u : distinct)
          for (int v : distinct)
            if (u != v) neighbours[u].insert(v);
        constraints_.push_back(std::move(c));
      }
    }
    order_.resize(vars_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int x, int y) { return neighbours[x].size() < neighbours[y].size(); });
  }

  std::optional<std::vector<Element>> run(const PartialMap& seed) {
    std::vector<std::uint64_t> dom(vars_ * words_, 0);
    for (std::size_t v = 0; v < vars_; ++v)
      for (std::size_t b = 0; b < vals_; ++b) set(dom, v, b);
    for (std::size_t v = 0; v < seed.size() && v < vars_; ++v) {
      if (!seed[v]) continue;
      const auto b = static_cast<std::size_t>(*seed[v]);
      for (std::size_t w = 0; w < words_; ++w) dom[v * words_ + w] = 0;
      if (b < vals_) set(dom, v, b);
    }
    if (vars_ > 0 && vals_ == 0) return std::nullopt;
    std::vector<int> all(constraints_.size());
    std::iota(all.begin(), all.end(), 0);
    if (!propagate(dom, all)) return std::nullopt;
    if (!search(dom)) return std::nullopt;
    std::vector<Element> map(vars_);
    for (std::size_t v = 0; v < vars_; ++v) map[v] = static_cast<Element>(first(solution_, v));
    return map;
  }

 private:
  struct Constraint {
    std::vector<int> scope;
    std::vector<std::size_t> first;  // first position holding the same variable
    const Relation* target = nullptr;
  };

  bool test(const std::vector<std::uint64_t>& d, std::size_t v, std::size_t b) const {
    return (d[v * words_ + b / 64] >> (b % 64)) & 1U;
  }
  void set(std::vector<std::uint64_t>& d, std::size_t v, std::size_t b) const {
    d[v * words_ + b / 64] |= std::uint64_t{1} << (b % 64);
  }
  std::size_t count(const std::vector<std::uint64_t>& d, std::size_t v) const {
    std::size_t c = 0;
    for (std::size_t w = 0; w < words_; ++w) c += static_cast<std::size_t>(std::popcount(d[v * words_ + w]));
    return c;
  }
  std::size_t first(const std::vector<std::uint64_t>& d, std::size_t v) const {
    for (std::size_t w = 0; w < words_; ++w)
      if (auto x = d[v * words_ + w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(x));
    return vals_;
  }

  // Generalized arc consistency over the queue seeded with `pending`.
  bool propagate(std::vector<std::uint64_t>& dom, const std::vector<int>& pending) {
    std::deque<int> queue(pending.begin(), pending.end());
    std::vector<char> queued(constraints_.size(), 0);
    for (int c : pending) queued[c] = 1;
    std::vector<std::uint64_t> support;
    while (!queue.empty()) {
      const int ci = queue.front();
      queue.pop_front();
      queued[ci] = 0;
      const auto& c = constraints_[ci];
      const std::size_t arity = c.scope.size();
      support.assign(arity * words_, 0);
      bool any = false;
      for (std::size_t t = 0; t < c.target->size(); ++t) {
        auto tup = c.target->tuple(t);
        bool ok = true;
        for (std::size_t p = 0; p < arity && ok; ++p)
          ok = (c.first[p] == p || tup[p] == tup[c.first[p]]) &&
               test(dom, static_cast<std::size_t>(c.scope[p]), static_cast<std::size_t>(tup[p]));
        if (!ok) continue;
        any = true;
        for (std::size_t p = 0; p < arity; ++p)
          support[p * words_ + static_cast<std::size_t>(tup[p]) / 64] |= std::uint64_t{1} << (tup[p] % 64);
      }
      if (!any) return false;
      for (std::size_t p = 0; p < arity; ++p) {
        if (c.first[p] != p) continue;
        const auto v = static_cast<std::size_t>(c.scope[p]);
        bool changed = false;
        for (std::size_t w = 0; w < words_; ++w) {
          auto next = dom[v * words_ + w] & support[p * words_ + w];
          if (next != dom[v * words_ + w]) {
            dom[v * words_ + w] = next;
            changed = true;
          }
        }
        if (!changed) continue;
        if (count(dom, v) == 0) return false;
        for (int other : var_constraints_[v])
          if (other != ci && !queued[other]) {
            queued[other] = 1;
            queue.push_back(other);
          }
      }
    }
    return true;
  }

  bool search(const std::vector<std::uint64_t>& dom) {
    std::size_t var = vars_;
    for (int v : order_)
      if (count(dom, static_cast<std::size_t>(v)) > 1) {
        var = static_cast<std::size_t>(v);
        break;
      }
    if (var == vars_) {
      solution_ = dom;
      return true;
    }
    for (std::size_t b = 0; b < vals_; ++b) {
      if (!test(dom, var, b)) continue;
      auto next = dom;
      for (std::size_t w = 0; w < words_; ++w) next[var * words_ + w] = 0;
      set(next, var, b);
      if (propagate(next, var_constraints_[var]) && search(next)) return true;
    }
    return false;
  }

  std::size_t vars_, vals_, words_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<int>> var_constraints_;
  std::vector<int> order_;
  std::vector<std::uint64_t> solution_;
};

void require_same_signature(const RelationalStructure& a, const RelationalStructure& b) {
  if (!a.signature().same_as(b.signature()))
    throw InvalidArgument("structures have different signatures");
}

}  // namespace

std::optional<Homomorphism> hom_search(const RelationalStructure& a, const RelationalStructure& b,
                                       const PartialMap& seed) {
  require_same_signature(a, b);
  if (seed.size() > static_cast<std::size_t>(a.size))
    throw InvalidArgument("seed is larger than the source domain");
  for (const auto& s : seed)
    if (s && (*s < 0 || *s >= b.size)) throw InvalidArgument("seed value outside the target domain");
  Searcher searcher(a, b);
  auto map = searcher.run(seed);
  if (!map) return std::nullopt;
  return Homomorphism{a.size, b.size, std::move(*map)};
}

bool is_homomorphism(const Homomorphism& h, const RelationalStructure& a,
                     const RelationalStructure& b) {
  require_same_signature(a, b);
  if (h.map.size() != static_cast<std::size_t>(a.size)) throw InvalidArgument("map is not total");
  for (Element x : h.map)
    if (x < 0 || x >= b.size) return false;
  std::vector<Element> image;
  for (const auto& ra : a.relations) {
    TupleSet target(*b.find(ra.name));
    for (std::size_t i = 0; i < ra.size(); ++i) {
      image.clear();
      for (Element x : ra.tuple(i)) image.push_back(h.map[static_cast<std::size_t>(x)]);
      if (!target.contains(image)) return false;
    }
  }
  return true;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& h) {
  if (h.target_size != g.source_size) throw InvalidArgument("maps are not composable");
  Homomorphism out{h.source_size, g.target_size, {}};
  out.map.reserve(h.map.size());
  for (Element x : h.map) out.map.push_back(g.map.at(static_cast<std::size_t>(x)));
  return out;
}

std::string singleton_relation_name(Element b) { return "{" + std::to_string(b) + "}"; }

RelationalStructure add_singleton_relations(const RelationalStructure& b) {
  RelationalStructure c = b;
  auto claim = [&](const std::string& name) {
    if (b.find(name) != nullptr)
      throw InvalidArgument("relation name '" + name + "' is reserved for the singleton expansion");
  };
  claim(std::string(kEqualityRelation));
  auto& eq = c.add_relation(std::string(kEqualityRelation), 2);
  for (Element x = 0; x < b.size; ++x) eq.add({x, x});
  for (Element x = 0; x < b.size; ++x) {
    auto name = singleton_relation_name(x);
    claim(name);
    c.add_relation(name, 1).add({x});
  }
  return c;
}

}  // namespace polymeta
