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

#include "polymeta/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace polymeta::oracle {
namespace {

using std::size_t;
using Tuple = std::vector<Element>;

std::set<Tuple> tuple_set(const Relation& r) {
  std::set<Tuple> s;
  for (size_t i = 0; i < r.size(); ++i) {
    auto t = r.tuple(i);
    s.emplace(t.begin(), t.end());
  }
  return s;
}

}  // namespace

bool hom_exists(const RelationalStructure& a, const RelationalStructure& b, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (Element i = 0; i < a.size; ++i) {
    total *= static_cast<std::uint64_t>(b.size);
    if (total > limit) throw std::length_error("too many maps for brute force");
  }
  std::vector<std::set<Tuple>> targets;
  std::vector<const Relation*> sources;
  for (const auto& r : a.relations) {
    const Relation* rb = b.find(r.name);
    if (!rb) throw std::invalid_argument("signature mismatch");
    sources.push_back(&r);
    targets.push_back(tuple_set(*rb));
  }
  std::vector<Element> h(static_cast<size_t>(a.size), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (auto& x : h) {
      x = static_cast<Element>(c % static_cast<std::uint64_t>(b.size));
      c /= static_cast<std::uint64_t>(b.size);
    }
    bool ok = true;
    for (size_t ri = 0; ri < sources.size() && ok; ++ri) {
      const Relation& r = *sources[ri];
      for (size_t t = 0; t < r.size() && ok; ++t) {
        Tuple img;
        for (Element v : r.tuple(t)) img.push_back(h[static_cast<size_t>(v)]);
        ok = targets[ri].count(img) > 0;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool contains(const Relation& r, const std::vector<Element>& t) {
  for (size_t i = 0; i < r.size(); ++i) {
    auto u = r.tuple(i);
    if (std::equal(u.begin(), u.end(), t.begin(), t.end())) return true;
  }
  return false;
}

bool preserves(const OperationTable& op, const RelationalStructure& b) {
  const int m = op.arity();
  const auto n = static_cast<std::uint64_t>(b.size);
  for (const auto& r : b.relations) {
    const size_t count = r.size();
    if (count == 0) continue;
    std::uint64_t space = 1;
    for (int i = 0; i < r.arity; ++i) space *= n;
    auto code_of = [&](const Tuple& t) {
      std::uint64_t c = 0;
      for (auto it = t.rbegin(); it != t.rend(); ++it) c = c * n + static_cast<std::uint64_t>(*it);
      return c;
    };
    std::vector<char> bitmap;
    std::set<Tuple> members;
    if (space <= 10'000'000) {
      bitmap.assign(space, 0);
      for (size_t i = 0; i < count; ++i) {
        auto t = r.tuple(i);
        bitmap[code_of(Tuple(t.begin(), t.end()))] = 1;
      }
    } else {
      members = tuple_set(r);
    }
    std::vector<size_t> pick(static_cast<size_t>(m), 0);
    Tuple out(static_cast<size_t>(r.arity));
    std::vector<Element> args(static_cast<size_t>(m));
    while (true) {
      for (int c = 0; c < r.arity; ++c) {
        for (int j = 0; j < m; ++j) args[static_cast<size_t>(j)] = r.tuple(pick[static_cast<size_t>(j)])[static_cast<size_t>(c)];
        out[static_cast<size_t>(c)] = op(args);
      }
      if (bitmap.empty() ? !members.count(out) : !bitmap[code_of(out)]) return false;
      size_t j = 0;
      while (j < pick.size() && ++pick[j] == count) pick[j++] = 0;
      if (j == pick.size()) break;
    }
  }
  return true;
}

bool maltsev(const OperationTable& m) {
  for (Element x = 0; x < m.domain(); ++x)
    for (Element y = 0; y < m.domain(); ++y)
      if (m({x, x, y}) != y || m({y, x, x}) != y) return false;
  return true;
}

std::vector<OperationTable> ternary_ops_on_two() {
  std::vector<OperationTable> out;
  for (int bits = 0; bits < 256; ++bits) {
    std::vector<Element> values(8);
    for (int i = 0; i < 8; ++i) values[static_cast<size_t>(i)] = (bits >> i) & 1;
    out.emplace_back(2, 3, std::move(values));
  }
  return out;
}

bool has_maltsev_on_two(const RelationalStructure& b, bool idempotent_only) {
  if (b.size != 2) throw std::invalid_argument("domain must have two elements");
  for (const auto& op : ternary_ops_on_two()) {
    if (idempotent_only && (op({0, 0, 0}) != 0 || op({1, 1, 1}) != 1)) continue;
    if (maltsev(op) && preserves(op, b)) return true;
  }
  return false;
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 1 || n > 7) throw std::invalid_argument("vertex count out of range");
  auto pair_index = [](int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;  // pairs ordered by larger endpoint
  };
  std::vector<std::uint32_t> level{0};
  for (int m = 2; m <= n; ++m) {
    const int pairs = m * (m - 1) / 2;
    std::vector<std::vector<int>> perm_maps;
    std::vector<int> perm(static_cast<size_t>(m));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<int> map(static_cast<size_t>(pairs));
      for (int j = 1; j < m; ++j)
        for (int i = 0; i < j; ++i)
          map[static_cast<size_t>(pair_index(i, j))] = pair_index(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
      perm_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::unordered_set<std::uint32_t> canon;
    std::vector<std::uint32_t> next;
    for (std::uint32_t g : level) {
      for (std::uint32_t s = 0; s < (1u << (m - 1)); ++s) {
        std::uint32_t h = g;
        for (int i = 0; i < m - 1; ++i)
          if ((s >> i) & 1) h |= 1u << pair_index(i, m - 1);
        std::uint32_t best = UINT32_MAX;
        for (const auto& map : perm_maps) {
          std::uint32_t r = 0;
          for (int p = 0; p < pairs; ++p)
            if ((h >> p) & 1) r |= 1u << map[static_cast<size_t>(p)];
          best = std::min(best, r);
        }
        if (canon.insert(best).second) next.push_back(best);
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (std::uint32_t g : level) {
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if ((g >> pair_index(i, j)) & 1) edges.emplace_back(i, j);
    out.push_back(Graph::from_edges(n, std::move(edges)));
  }
  return out;
}

bool decomposable(const Graph& g) {
  const size_t m = g.edges.size();
  std::vector<char> removed(m, 0);
  std::vector<char> covered(static_cast<size_t>(g.vertices), 0);
  auto rest_bipartite = [&]() {
    std::vector<int> colour(static_cast<size_t>(g.vertices), -1);
    for (int s = 0; s < g.vertices; ++s) {
      if (colour[static_cast<size_t>(s)] >= 0) continue;
      colour[static_cast<size_t>(s)] = 0;
      bool changed = true;
      while (changed) {
        changed = false;
        for (size_t e = 0; e < m; ++e) {
          if (removed[e]) continue;
          auto [u, v] = g.edges[e];
          int& cu = colour[static_cast<size_t>(u)];
          int& cv = colour[static_cast<size_t>(v)];
          if (cu >= 0 && cv >= 0) {
            if (cu == cv) return false;
          } else if (cu >= 0) {
            cv = 1 - cu;
            changed = true;
          } else if (cv >= 0) {
            cu = 1 - cv;
            changed = true;
          }
        }
      }
    }
    return true;
  };
  std::function<bool(size_t)> go = [&](size_t e) -> bool {
    if (e == m) return rest_bipartite();
    if (go(e + 1)) return true;
    auto [u, v] = g.edges[e];
    if (covered[static_cast<size_t>(u)] || covered[static_cast<size_t>(v)]) return false;
    covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 1;
    removed[e] = 1;
    const bool ok = go(e + 1);
    removed[e] = 0;
    covered[static_cast<size_t>(u)] = covered[static_cast<size_t>(v)] = 0;
    return ok;
  };
  return go(0);
}

bool nae_satisfiable(const NaeInstance& phi) {
  for (long a = 0; a < (1L << phi.variables); ++a) {
    bool ok = std::all_of(phi.clauses.begin(), phi.clauses.end(), [&](const std::array<int, 3>& c) {
      const bool x = (a >> c[0]) & 1, y = (a >> c[1]) & 1, z = (a >> c[2]) & 1;
      return !(x == y && y == z);
    });
    if (ok) return true;
  }
  return false;
}

std::uint64_t PowerGroup::size() const {
  std::uint64_t s = 1;
  for (int i = 0; i < k; ++i) s *= static_cast<std::uint64_t>(g->order());
  return s;
}

std::vector<Element> PowerGroup::decode(std::uint64_t a) const {
  std::vector<Element> t;
  for (int i = 0; i < k; ++i) {
    t.push_back(static_cast<Element>(a % static_cast<std::uint64_t>(g->order())));
    a /= static_cast<std::uint64_t>(g->order());
  }
  return t;
}

std::uint64_t PowerGroup::mul(std::uint64_t a, std::uint64_t b) const {
  const auto n = static_cast<std::uint64_t>(g->order());
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < k; ++i) {
    out += static_cast<std::uint64_t>(g->mul(static_cast<Element>(a % n), static_cast<Element>(b % n))) * scale;
    a /= n;
    b /= n;
    scale *= n;
  }
  return out;
}

std::uint64_t PowerGroup::inv(std::uint64_t a) const {
  const auto n = static_cast<std::uint64_t>(g->order());
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < k; ++i) {
    out += static_cast<std::uint64_t>(g->inv(static_cast<Element>(a % n))) * scale;
    a /= n;
    scale *= n;
  }
  return out;
}

std::uint64_t PowerGroup::identity() const {
  std::uint64_t out = 0, scale = 1;
  for (int i = 0; i < k; ++i) {
    out += static_cast<std::uint64_t>(g->identity()) * scale;
    scale *= static_cast<std::uint64_t>(g->order());
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> subgroups(const PowerGroup& g) {
  const std::uint64_t n = g.size();
  struct Node {
    std::vector<char> in;
    std::vector<std::uint64_t> gens;
  };
  auto close = [&](const std::vector<std::uint64_t>& gens) {
    std::vector<char> in(n, 0);
    std::vector<std::uint64_t> queue{g.identity()};
    in[g.identity()] = 1;
    for (size_t q = 0; q < queue.size(); ++q)
      for (auto s : gens) {
        const auto p = g.mul(queue[q], s);
        if (!in[p]) {
          in[p] = 1;
          queue.push_back(p);
        }
      }
    return in;
  };
  std::set<std::vector<char>> seen;
  std::vector<Node> frontier{{close({}), {}}};
  seen.insert(frontier[0].in);
  while (!frontier.empty()) {
    std::vector<Node> next;
    for (const auto& node : frontier)
      for (std::uint64_t x = 0; x < n; ++x) {
        if (node.in[x]) continue;
        auto gens = node.gens;
        gens.push_back(x);
        auto in = close(gens);
        if (seen.insert(in).second) next.push_back({std::move(in), std::move(gens)});
      }
    frontier = std::move(next);
  }
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& in : seen) {
    std::vector<std::uint64_t> s;
    for (std::uint64_t x = 0; x < n; ++x)
      if (in[x]) s.push_back(x);
    out.push_back(std::move(s));
  }
  return out;
}

std::set<std::vector<std::uint64_t>> all_cosets(const PowerGroup& g) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& h : subgroups(g))
    for (std::uint64_t x = 0; x < g.size(); ++x) {
      std::vector<std::uint64_t> c;
      for (auto y : h) c.push_back(g.mul(x, y));
      std::sort(c.begin(), c.end());
      out.insert(std::move(c));
    }
  return out;
}

Relation relation_of(const PowerGroup& g, const std::vector<std::uint64_t>& codes) {
  Relation r{"R", g.k, {}};
  for (auto c : codes) {
    auto t = g.decode(c);
    r.data.insert(r.data.end(), t.begin(), t.end());
  }
  return r;
}

Integer det(const MatrixZ& m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  MatrixZ a = m;
  Integer sign = 1, last = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / last;
      a[i][k] = 0;
    }
    last = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

RelationalStructure random_structure(Rng& rng, Element size, int relations, int max_arity, double density) {
  RelationalStructure s(size);
  std::uniform_int_distribution<int> arity(1, max_arity);
  std::bernoulli_distribution keep(density);
  for (int r = 0; r < relations; ++r) {
    const int k = arity(rng);
    Relation& rel = s.add_relation("R" + std::to_string(r), k);
    std::uint64_t total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<std::uint64_t>(size);
    for (std::uint64_t code = 0; code < total; ++code) {
      if (!keep(rng)) continue;
      std::uint64_t c = code;
      for (int i = 0; i < k; ++i) {
        rel.data.push_back(static_cast<Element>(c % static_cast<std::uint64_t>(size)));
        c /= static_cast<std::uint64_t>(size);
      }
    }
  }
  return s;
}

Relation random_abelian_coset(Rng& rng, Element d, int k, int gens, const std::string& name) {
  std::uniform_int_distribution<Element> value(0, d - 1);
  std::uniform_int_distribution<int> count(1, gens);
  std::vector<std::vector<Element>> g;
  const int c = count(rng);
  for (int i = 0; i < c; ++i) {
    std::vector<Element> t(static_cast<size_t>(k));
    for (auto& x : t) x = value(rng);
    g.push_back(std::move(t));
  }
  std::set<std::vector<Element>> span{std::vector<Element>(static_cast<size_t>(k), 0)};
  std::vector<std::vector<Element>> queue(span.begin(), span.end());
  for (size_t q = 0; q < queue.size(); ++q)
    for (const auto& s : g) {
      std::vector<Element> t(static_cast<size_t>(k));
      for (int i = 0; i < k; ++i) t[static_cast<size_t>(i)] = (queue[q][static_cast<size_t>(i)] + s[static_cast<size_t>(i)]) % d;
      if (span.insert(t).second) queue.push_back(t);
    }
  std::vector<Element> shift(static_cast<size_t>(k));
  for (auto& x : shift) x = value(rng);
  Relation r{name, k, {}};
  for (const auto& t : span)
    for (int i = 0; i < k; ++i) r.data.push_back((t[static_cast<size_t>(i)] + shift[static_cast<size_t>(i)]) % d);
  r.normalize();
  return r;
}

}  // namespace polymeta::oracle
