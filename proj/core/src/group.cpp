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

#include "polymeta/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polymeta/error.hpp"
#include "polymeta/meta.hpp"

namespace polymeta {
namespace {

using std::size_t;

size_t idx(Element a, Element b, Element n) {
  return static_cast<size_t>(a) * static_cast<size_t>(n) + static_cast<size_t>(b);
}

std::string str(long long v) { return std::to_string(v); }

}  // namespace

GroupTable::GroupTable(Element order, std::vector<Element> table) : order_(order), mul_(std::move(table)) {
  if (order_ < 1) throw InvalidArgument("group order must be positive");
  const size_t n = static_cast<size_t>(order_);
  if (mul_.size() != n * n)
    throw InvalidArgument("multiplication table has " + str(static_cast<long long>(mul_.size())) +
                          " entries, expected " + str(static_cast<long long>(n * n)));
  for (Element v : mul_)
    if (v < 0 || v >= order_) throw InvalidArgument("table entry " + str(v) + " out of range");

  std::vector<char> seen(n);
  for (Element a = 0; a < order_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < order_; ++b) {
      auto& s = seen[static_cast<size_t>(mul_[idx(a, b, order_)])];
      if (s) throw InvalidArgument("row " + str(a) + " repeats an entry");
      s = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (Element b = 0; b < order_; ++b) {
      auto& s = seen[static_cast<size_t>(mul_[idx(b, a, order_)])];
      if (s) throw InvalidArgument("column " + str(a) + " repeats an entry");
      s = 1;
    }
  }

  identity_ = -1;
  for (Element e = 0; e < order_ && identity_ < 0; ++e) {
    bool ok = true;
    for (Element x = 0; x < order_ && ok; ++x) ok = mul(e, x) == x && mul(x, e) == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InvalidArgument("no identity element");

  inv_.assign(n, 0);
  for (Element a = 0; a < order_; ++a) {
    for (Element b = 0; b < order_; ++b) {
      if (mul(a, b) == identity_) {
        if (mul(b, a) != identity_) throw InvalidArgument("left and right inverse of " + str(a) + " differ");
        inv_[static_cast<size_t>(a)] = b;
        break;
      }
    }
  }
  if (order_ <= kAssociativityCheckBound && !is_associative())
    throw InvalidArgument("multiplication is not associative");
}

Element GroupTable::pow(Element a, long long k) const {
  if (k < 0) {
    a = inv(a);
    k = -k;
  }
  Element result = identity_;
  Element base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int GroupTable::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

bool GroupTable::is_associative() const {
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) {
      const Element ab = mul(a, b);
      for (Element c = 0; c < order_; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) return false;
    }
  return true;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroupTable cyclic(Element n) {
  if (n < 1) throw InvalidArgument("cyclic group order must be positive");
  std::vector<Element> mul(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul[idx(a, b, n)] = (a + b) % n;
  return GroupTable(n, std::move(mul));
}

GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
  GroupAction trivial(static_cast<size_t>(h.order()));
  for (auto& perm : trivial) {
    perm.resize(static_cast<size_t>(g.order()));
    for (Element x = 0; x < g.order(); ++x) perm[static_cast<size_t>(x)] = x;
  }
  return semidirect(g, h, trivial);
}

GroupTable semidirect(const GroupTable& g, const GroupTable& h, const GroupAction& action) {
  const Element ng = g.order(), nh = h.order();
  if (action.size() != static_cast<size_t>(nh))
    throw InvalidArgument("action must give one permutation per element of H");
  for (Element x = 0; x < nh; ++x) {
    const auto& phi = action[static_cast<size_t>(x)];
    if (phi.size() != static_cast<size_t>(ng)) throw InvalidArgument("action permutation has wrong length");
    std::vector<char> seen(static_cast<size_t>(ng));
    for (Element v : phi) {
      if (v < 0 || v >= ng || seen[static_cast<size_t>(v)])
        throw InvalidArgument("action of " + str(x) + " is not a permutation");
      seen[static_cast<size_t>(v)] = 1;
    }
    for (Element a = 0; a < ng; ++a)
      for (Element b = 0; b < ng; ++b)
        if (phi[static_cast<size_t>(g.mul(a, b))] !=
            g.mul(phi[static_cast<size_t>(a)], phi[static_cast<size_t>(b)]))
          throw InvalidArgument("action of " + str(x) + " is not an automorphism");
  }
  for (Element x = 0; x < nh; ++x)
    for (Element y = 0; y < nh; ++y) {
      const auto& pxy = action[static_cast<size_t>(h.mul(x, y))];
      const auto& px = action[static_cast<size_t>(x)];
      const auto& py = action[static_cast<size_t>(y)];
      for (Element a = 0; a < ng; ++a)
        if (pxy[static_cast<size_t>(a)] != px[static_cast<size_t>(py[static_cast<size_t>(a)])])
          throw InvalidArgument("action is not a homomorphism");
    }

  const Element n = ng * nh;
  std::vector<Element> mul(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (Element h1 = 0; h1 < nh; ++h1)
    for (Element g1 = 0; g1 < ng; ++g1)
      for (Element h2 = 0; h2 < nh; ++h2)
        for (Element g2 = 0; g2 < ng; ++g2) {
          const Element gg = g.mul(g1, action[static_cast<size_t>(h1)][static_cast<size_t>(g2)]);
          const Element hh = h.mul(h1, h2);
          mul[idx(h1 * ng + g1, h2 * ng + g2, n)] = hh * ng + gg;
        }
  return GroupTable(n, std::move(mul));
}

GroupTable dihedral(Element order) {
  if (order < 2 || order % 2 != 0) throw InvalidArgument("dihedral order must be even and positive");
  const Element n = order / 2;
  std::vector<Element> mul(static_cast<size_t>(order) * static_cast<size_t>(order));
  for (Element k1 = 0; k1 < 2; ++k1)
    for (Element l1 = 0; l1 < n; ++l1)
      for (Element k2 = 0; k2 < 2; ++k2)
        for (Element l2 = 0; l2 < n; ++l2) {
          const Element k = (k1 + k2) % 2;
          const Element l = (((k2 ? -l1 : l1) + l2) % n + n) % n;
          mul[idx(k1 * n + l1, k2 * n + l2, order)] = k * n + l;
        }
  return GroupTable(order, std::move(mul));
}

Element dihedral_element(Element order, int reflection, int rotation) {
  const Element n = order / 2;
  return (reflection & 1) * n + ((rotation % n) + n) % n;
}

namespace {

GroupTable cp_c4(Element p, Element k) {
  GroupAction action(4, std::vector<Element>(static_cast<size_t>(p)));
  long long f = 1;
  for (size_t h = 0; h < 4; ++h) {
    for (Element x = 0; x < p; ++x) action[h][static_cast<size_t>(x)] = static_cast<Element>((f * x) % p);
    f = (f * k) % p;
  }
  return semidirect(cyclic(p), cyclic(4), action);
}

void require_odd_prime(Element p) {
  if (p < 5 || !is_prime(p)) throw InvalidArgument("p = " + str(p) + " must be a prime >= 5");
}

}  // namespace

GroupTable dicyclic_4p(Element p) {
  require_odd_prime(p);
  return cp_c4(p, p - 1);
}

GroupTable cp_c4_faithful(Element p, Element k) {
  require_odd_prime(p);
  if (p % 4 != 1) throw InvalidArgument("a faithful C_4 action on C_" + str(p) + " needs p = 1 mod 4");
  auto order4 = [p](long long x) {
    const long long x2 = x * x % p;
    return x2 != 1 && x2 * x2 % p == 1;
  };
  if (k == 0) {
    for (k = 2; k < p && !order4(k); ++k) {
    }
  } else if (k < 0 || k >= p || !order4(k)) {
    throw InvalidArgument(str(k) + " does not have multiplicative order 4 mod " + str(p));
  }
  return cp_c4(p, k);
}

namespace {

// Smallest subgroup containing `base` and `g`; `base` must be a subgroup.
std::vector<char> closure_with(const GroupTable& grp, const std::vector<char>& base, Element g) {
  std::vector<char> in = base;
  std::vector<Element> elems;
  for (Element x = 0; x < grp.order(); ++x)
    if (in[static_cast<size_t>(x)]) elems.push_back(x);
  if (!in[static_cast<size_t>(g)]) {
    in[static_cast<size_t>(g)] = 1;
    elems.push_back(g);
  }
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      for (Element p : {grp.mul(elems[i], elems[j]), grp.mul(elems[j], elems[i])}) {
        if (!in[static_cast<size_t>(p)]) {
          in[static_cast<size_t>(p)] = 1;
          elems.push_back(p);
        }
      }
    }
  }
  return in;
}

Subgroup to_subgroup(const std::vector<char>& in) {
  Subgroup s;
  for (size_t x = 0; x < in.size(); ++x)
    if (in[x]) s.push_back(static_cast<Element>(x));
  return s;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const GroupTable& g, const Limits& limits) {
  if (static_cast<std::uint64_t>(g.order()) > limits.subgroup_order)
    throw LimitExceeded("subgroup enumeration is limited to order " + str(static_cast<long long>(limits.subgroup_order)));
  std::set<std::vector<char>> found;
  std::vector<std::vector<char>> frontier;
  std::vector<char> trivial(static_cast<size_t>(g.order()));
  trivial[static_cast<size_t>(g.identity())] = 1;
  found.insert(trivial);
  frontier.push_back(trivial);
  // Every subgroup is reached by adjoining its elements one at a time.
  while (!frontier.empty()) {
    std::vector<std::vector<char>> next;
    for (const auto& h : frontier) {
      for (Element x = 0; x < g.order(); ++x) {
        if (h[static_cast<size_t>(x)]) continue;
        auto k = closure_with(g, h, x);
        if (found.insert(k).second) next.push_back(std::move(k));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& in : found) out.push_back(to_subgroup(in));
  std::sort(out.begin(), out.end(), subgroup_less);
  return out;
}

std::vector<Subgroup> subgroups_of_order(const GroupTable& g, Element m, const Limits& limits) {
  std::vector<Subgroup> out;
  if (m < 1 || g.order() % m != 0) return out;
  if (m <= 2) {
    for (Element x = 0; x < g.order(); ++x)
      if (g.element_order(x) == m) out.push_back(to_subgroup(closure_with(g, std::vector<char>(static_cast<size_t>(g.order())), x)));
    std::sort(out.begin(), out.end(), subgroup_less);
    return out;
  }
  for (auto& s : all_subgroups(g, limits))
    if (s.size() == static_cast<size_t>(m)) out.push_back(std::move(s));
  return out;
}

bool is_coset(const Relation& r, const GroupTable& g) {
  if (r.empty()) throw InvalidArgument("is_coset needs a nonempty relation");
  if (r.arity < 1) throw InvalidArgument("relation arity must be positive");
  for (Element v : r.data)
    if (v < 0 || v >= g.order()) throw InvalidArgument("tuple entry " + str(v) + " is not a group element");
  const size_t k = static_cast<size_t>(r.arity);
  const auto y = r.tuple(0);

  Relation shifted{r.name, r.arity, {}};
  shifted.data.reserve(r.data.size());
  for (size_t i = 0; i < r.size(); ++i) {
    auto t = r.tuple(i);
    for (size_t c = 0; c < k; ++c) shifted.data.push_back(g.mul(g.inv(y[c]), t[c]));
  }
  shifted.normalize();
  if (shifted.size() != r.size()) return false;  // r had duplicates
  const size_t count = shifted.size();
  if (count > 1) {
    // A coset of a subgroup of G^k has size dividing |G|^k.
    size_t rest = count;
    for (size_t c = 0; c < k && rest > 1; ++c) {
      size_t gcd = std::gcd(rest, static_cast<size_t>(g.order()));
      while (gcd > 1) {
        rest /= gcd;
        gcd = std::gcd(rest, static_cast<size_t>(g.order()));
      }
    }
    if (rest != 1) return false;
  }

  TupleSet members(shifted);
  std::vector<Element> t(k);
  for (size_t i = 0; i < count; ++i) {
    auto a = shifted.tuple(i);
    for (size_t c = 0; c < k; ++c) t[c] = g.inv(a[c]);
    if (!members.contains(t)) return false;
    for (size_t j = 0; j < count; ++j) {
      auto b = shifted.tuple(j);
      for (size_t c = 0; c < k; ++c) t[c] = g.mul(a[c], b[c]);
      if (!members.contains(t)) return false;
    }
  }
  return true;
}

Graph coset_graph(const GroupTable& g) {
  std::vector<Edge> edges;
  for (Element t = 0; t < g.order(); ++t) {
    if (t == g.identity() || g.mul(t, t) != g.identity()) continue;
    for (Element x = 0; x < g.order(); ++x) edges.emplace_back(x, g.mul(x, t));
  }
  return Graph::from_edges(g.order(), std::move(edges));
}

std::vector<Edge> cosets_of_order2(const GroupTable& d) {
  const Element order = d.order();
  if (order < 4 || order % 4 != 0 || !(d == dihedral(order)))
    throw InvalidArgument("cosets_of_order2 needs the dihedral table of an order divisible by 4");
  const Element m = order / 4;
  const Element n = 2 * m;
  std::vector<Edge> out;
  for (Element k = 0; k < n; ++k)
    for (Element l = 0; l < n; ++l) out.emplace_back(dihedral_element(order, 0, k), dihedral_element(order, 1, l));
  for (Element a = 0; a < order; ++a) out.emplace_back(a, d.mul(a, dihedral_element(order, 0, m)));
  for (auto& [u, v] : out)
    if (u > v) std::swap(u, v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::map<int, int> order_census(const GroupTable& g) {
  std::map<int, int> census;
  for (Element x = 0; x < g.order(); ++x) ++census[g.element_order(x)];
  return census;
}

std::optional<std::vector<Element>> find_isomorphism(const GroupTable& a, const GroupTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  const Element n = a.order();
  std::vector<int> order_a(static_cast<size_t>(n)), order_b(static_cast<size_t>(n));
  for (Element x = 0; x < n; ++x) {
    order_a[static_cast<size_t>(x)] = a.element_order(x);
    order_b[static_cast<size_t>(x)] = b.element_order(x);
  }
  {
    auto sa = order_a, sb = order_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Greedy generating set, preferring elements of large order.
  std::vector<Element> by_order(static_cast<size_t>(n));
  for (Element x = 0; x < n; ++x) by_order[static_cast<size_t>(x)] = x;
  std::stable_sort(by_order.begin(), by_order.end(), [&](Element x, Element y) {
    return order_a[static_cast<size_t>(x)] > order_a[static_cast<size_t>(y)];
  });
  std::vector<Element> gens;
  std::vector<char> span(static_cast<size_t>(n));
  span[static_cast<size_t>(a.identity())] = 1;
  for (Element x : by_order) {
    if (span[static_cast<size_t>(x)]) continue;
    gens.push_back(x);
    span = closure_with(a, span, x);
  }

  std::vector<Element> images(gens.size());
  std::vector<Element> phi;
  std::vector<Element> queue;

  auto extend = [&]() -> bool {
    phi.assign(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n));
    phi[static_cast<size_t>(a.identity())] = b.identity();
    used[static_cast<size_t>(b.identity())] = 1;
    queue.assign(1, a.identity());
    for (size_t q = 0; q < queue.size(); ++q) {
      const Element u = queue[q];
      for (size_t i = 0; i < gens.size(); ++i) {
        const Element v = a.mul(u, gens[i]);
        const Element w = b.mul(phi[static_cast<size_t>(u)], images[i]);
        auto& pv = phi[static_cast<size_t>(v)];
        if (pv < 0) {
          if (used[static_cast<size_t>(w)]) return false;
          pv = w;
          used[static_cast<size_t>(w)] = 1;
          queue.push_back(v);
        } else if (pv != w) {
          return false;
        }
      }
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (phi[static_cast<size_t>(a.mul(x, y))] != b.mul(phi[static_cast<size_t>(x)], phi[static_cast<size_t>(y)]))
          return false;
    return true;
  };

  std::function<bool(size_t)> assign = [&](size_t i) -> bool {
    if (i == gens.size()) return extend();
    const int want = order_a[static_cast<size_t>(gens[i])];
    for (Element y = 0; y < n; ++y) {
      if (order_b[static_cast<size_t>(y)] != want) continue;
      images[i] = y;
      if (assign(i + 1)) return true;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return phi;
}

bool is_isomorphic(const GroupTable& a, const GroupTable& b) { return find_isomorphism(a, b).has_value(); }

namespace {

// Backtracking over Cayley tables with identity 0. Cells are filled in order
// of max(row, column); a value larger than every label seen so far is only
// tried once, since unseen labels are interchangeable.
class TableEnumerator {
 public:
  TableEnumerator(Element n, const std::function<bool(const std::vector<Element>&)>& found)
      : n_(n), found_(found), table_(static_cast<size_t>(n) * static_cast<size_t>(n), -1) {
    for (Element x = 0; x < n; ++x) {
      at(0, x) = x;
      at(x, 0) = x;
    }
    row_used_.assign(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n)));
    col_used_ = row_used_;
    for (Element x = 0; x < n; ++x) {
      row_used_[0][static_cast<size_t>(x)] = col_used_[0][static_cast<size_t>(x)] = 1;
      row_used_[static_cast<size_t>(x)][static_cast<size_t>(x)] = 1;
      col_used_[static_cast<size_t>(x)][static_cast<size_t>(x)] = 1;
    }
    for (Element r = 1; r < n; ++r) {
      for (Element j = 1; j <= r; ++j) cells_.emplace_back(r, j);
      for (Element i = 1; i < r; ++i) cells_.emplace_back(i, r);
    }
    // cells of max r: row r first, then column r.
    std::stable_sort(cells_.begin(), cells_.end(), [](const auto& x, const auto& y) {
      return std::max(x.first, x.second) < std::max(y.first, y.second);
    });
  }

  void run() { step(0, 0); }

 private:
  Element& at(Element a, Element b) { return table_[idx(a, b, n_)]; }
  Element get(Element a, Element b) const { return table_[idx(a, b, n_)]; }

  bool step(size_t cell, Element max_label) {
    if (cell == cells_.size()) return found_(table_);
    const auto [a, b] = cells_[cell];
    const Element seen = std::max({max_label, a, b});
    const Element top = std::min<Element>(seen + 1, n_ - 1);
    for (Element v = 0; v <= top; ++v) {
      if (row_used_[static_cast<size_t>(a)][static_cast<size_t>(v)] ||
          col_used_[static_cast<size_t>(b)][static_cast<size_t>(v)])
        continue;
      at(a, b) = v;
      row_used_[static_cast<size_t>(a)][static_cast<size_t>(v)] = 1;
      col_used_[static_cast<size_t>(b)][static_cast<size_t>(v)] = 1;
      const bool keep_going = !associative_so_far(a, b) || step(cell + 1, std::max(seen, v));
      row_used_[static_cast<size_t>(a)][static_cast<size_t>(v)] = 0;
      col_used_[static_cast<size_t>(b)][static_cast<size_t>(v)] = 0;
      at(a, b) = -1;
      if (!keep_going) return false;
    }
    return true;
  }

  // Checks every associativity instance in which cell (a, b) takes part and
  // whose other cells are already filled.
  bool associative_so_far(Element a, Element b) const {
    const Element c = get(a, b);
    for (Element x = 0; x < n_; ++x) {
      // (a b) x = a (b x)
      Element cx = get(c, x), bx = get(b, x);
      if (cx >= 0 && bx >= 0) {
        Element r = get(a, bx);
        if (r >= 0 && r != cx) return false;
      }
      // x (a b) = (x a) b
      Element xc = get(x, c), xa = get(x, a);
      if (xc >= 0 && xa >= 0) {
        Element r = get(xa, b);
        if (r >= 0 && r != xc) return false;
      }
    }
    for (Element y = 0; y < n_; ++y)
      for (Element z = 0; z < n_; ++z) {
        const Element yz = get(y, z);
        if (yz == a) {
          // (y z) b = y (z b)
          Element zb = get(z, b);
          if (zb >= 0) {
            Element r = get(y, zb);
            if (r >= 0 && r != c) return false;
          }
        }
        if (yz == b) {
          // a (y z) = (a y) z
          Element ay = get(a, y);
          if (ay >= 0) {
            Element r = get(ay, z);
            if (r >= 0 && r != c) return false;
          }
        }
      }
    return true;
  }

  Element n_;
  const std::function<bool(const std::vector<Element>&)>& found_;
  std::vector<Element> table_;
  std::vector<std::vector<char>> row_used_, col_used_;
  std::vector<std::pair<Element, Element>> cells_;
};

}  // namespace

void enumerate_groups_on_set(Element n, const std::function<bool(const GroupTable&)>& yield, const Limits& limits) {
  if (n < 1) throw InvalidArgument("group order must be positive");
  if (static_cast<std::uint64_t>(n) > limits.enumerate_order)
    throw LimitExceeded("group enumeration is limited to order " + str(static_cast<long long>(limits.enumerate_order)));
  std::vector<GroupTable> reps;
  std::function<bool(const std::vector<Element>&)> found = [&](const std::vector<Element>& table) {
    GroupTable g(n, table);
    for (const auto& r : reps)
      if (is_isomorphic(r, g)) return true;
    reps.push_back(g);
    return yield(reps.back());
  };
  TableEnumerator(n, found).run();
}

std::vector<GroupTable> enumerate_groups_on_set(Element n, const Limits& limits) {
  std::vector<GroupTable> out;
  enumerate_groups_on_set(
      n,
      [&](const GroupTable& g) {
        out.push_back(g);
        return true;
      },
      limits);
  return out;
}

std::vector<std::pair<std::string, GroupTable>> order_4p_candidates(Element p) {
  require_odd_prime(p);
  std::vector<std::pair<std::string, GroupTable>> out;
  out.emplace_back("C_2xC_2xC_p", direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(p)));
  out.emplace_back("C_4p", cyclic(4 * p));
  out.emplace_back("D_4p", dihedral(4 * p));
  out.emplace_back("Dic_4p", dicyclic_4p(p));
  if (p % 4 == 1) out.emplace_back("C_p:C_4", cp_c4_faithful(p));
  return out;
}

std::string classify_order_4p(const GroupTable& g) {
  if (g.order() % 4 != 0) throw InvalidArgument("order " + str(g.order()) + " is not of the form 4p");
  const Element p = g.order() / 4;
  require_odd_prime(p);
  for (const auto& [label, candidate] : order_4p_candidates(p))
    if (is_isomorphic(g, candidate)) return label;
  throw InvalidArgument("group of order " + str(g.order()) + " matches no candidate");
}

OperationTable heap_from_group(const GroupTable& g) {
  return OperationTable::from_function(g.order(), 3, [&g](std::span<const Element> t) {
    return g.mul(g.mul(t[0], g.inv(t[1])), t[2]);
  });
}

GroupTable group_from_heap(const OperationTable& m, Element e) {
  if (m.arity() != 3) throw InvalidArgument("a heap operation is ternary");
  if (e < 0 || e >= m.domain()) throw InvalidArgument("identity " + str(e) + " out of domain");
  if (!is_heap(m)) throw InvalidArgument("operation is not a heap");
  const Element n = m.domain();
  std::vector<Element> mul(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) mul[idx(x, y, n)] = m({x, e, y});
  return GroupTable(n, std::move(mul));
}

GroupTable relabel(const GroupTable& g, const std::vector<Element>& perm) {
  const Element n = g.order();
  if (perm.size() != static_cast<size_t>(n)) throw InvalidArgument("relabelling has wrong length");
  std::vector<Element> mul(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      mul[idx(perm[static_cast<size_t>(a)], perm[static_cast<size_t>(b)], n)] = perm[static_cast<size_t>(g.mul(a, b))];
  for (Element v : mul)
    if (v < 0) throw InvalidArgument("relabelling is not a bijection");
  return GroupTable(n, std::move(mul));
}

}  // namespace polymeta
