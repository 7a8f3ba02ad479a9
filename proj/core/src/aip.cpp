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

#include "polymeta/aip.hpp"

#include <algorithm>
#include <sstream>

#include "polymeta/error.hpp"

namespace polymeta {
namespace {

using std::size_t;

size_t column_count(const MatrixZ& m, size_t columns) { return m.empty() ? columns : m.front().size(); }

// row_i -= q * row_r
void sub_mul(VectorZ& row_i, const VectorZ& row_r, const Integer& q) {
  if (q == 0) return;
  for (size_t j = 0; j < row_i.size(); ++j)
    if (row_r[j] != 0) row_i[j] -= q * row_r[j];
}

void negate(VectorZ& row) {
  for (auto& v : row) v = -v;
}

}  // namespace

MatrixZ identity_matrix(size_t n) {
  MatrixZ m(n, VectorZ(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

MatrixZ multiply(const MatrixZ& a, const MatrixZ& b) {
  const size_t inner = b.size();
  const size_t cols = b.empty() ? 0 : b.front().size();
  MatrixZ c(a.size(), VectorZ(cols, 0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != inner) throw InvalidArgument("matrix dimensions do not match");
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

VectorZ multiply(const MatrixZ& a, const VectorZ& x) {
  VectorZ y(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != x.size()) throw InvalidArgument("matrix dimensions do not match");
    for (size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  }
  return y;
}

MatrixZ transpose(const MatrixZ& m, size_t columns) {
  const size_t cols = column_count(m, columns);
  MatrixZ t(cols, VectorZ(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

Integer determinant(const MatrixZ& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw InvalidArgument("determinant of a non-square matrix");
  if (n == 0) return 1;
  MatrixZ a = m;
  Integer sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::string to_text(const MatrixZ& m) {
  std::string out;
  for (const auto& row : m) {
    for (size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += row[j].get_str();
    }
    out += '\n';
  }
  return out;
}

MatrixZ parse_matrix(std::string_view text) {
  MatrixZ m;
  std::istringstream in{std::string(text)};
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    VectorZ row;
    while (ls >> tok) {
      Integer v;
      if (v.set_str(tok, 10) != 0) throw ParseError("line " + std::to_string(lineno), "bad integer '" + tok + "'");
      row.push_back(v);
    }
    if (row.empty()) continue;
    if (!m.empty() && row.size() != m.front().size())
      throw ParseError("line " + std::to_string(lineno), "ragged matrix row");
    m.push_back(std::move(row));
  }
  return m;
}

void LinearSystemZ::add_equation(std::vector<Entry> row, Integer b) {
  for (const auto& e : row)
    if (e.var >= variables) throw InvalidArgument("equation refers to an undeclared variable");
  std::sort(row.begin(), row.end(), [](const Entry& x, const Entry& y) { return x.var < y.var; });
  std::vector<Entry> merged;
  for (auto& e : row) {
    if (!merged.empty() && merged.back().var == e.var)
      merged.back().coeff += e.coeff;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const Entry& e) { return e.coeff == 0; });
  rows.push_back(std::move(merged));
  rhs.push_back(std::move(b));
}

MatrixZ LinearSystemZ::matrix() const {
  MatrixZ m(rows.size(), VectorZ(variables, 0));
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& e : rows[i]) m[i][e.var] = e.coeff;
  return m;
}

bool LinearSystemZ::satisfied_by(const VectorZ& x) const {
  if (x.size() != variables) return false;
  for (size_t i = 0; i < rows.size(); ++i) {
    Integer s = 0;
    for (const auto& e : rows[i]) s += e.coeff * x[e.var];
    if (s != rhs[i]) return false;
  }
  return true;
}

HermiteForm hnf(const MatrixZ& m, size_t columns) {
  const size_t rows = m.size();
  const size_t cols = column_count(m, columns);
  for (const auto& row : m)
    if (row.size() != cols) throw InvalidArgument("ragged matrix");
  HermiteForm f{m, identity_matrix(rows), 0, {}};
  auto& h = f.h;
  auto& u = f.u;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.., always pivoting on the smallest
    // nonzero magnitude.
    while (true) {
      size_t best = rows;
      for (size_t i = r; i < rows; ++i)
        if (h[i][c] != 0 && (best == rows || abs(h[i][c]) < abs(h[best][c]))) best = i;
      if (best == rows) break;
      if (best != r) {
        std::swap(h[best], h[r]);
        std::swap(u[best], u[r]);
      }
      bool clean = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (h[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
        sub_mul(h[i], h[r], q);
        sub_mul(u[i], u[r], q);
        if (h[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (h[r][c] == 0) continue;
    if (h[r][c] < 0) {
      negate(h[r]);
      negate(u[r]);
    }
    for (size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
      sub_mul(h[i], h[r], q);
      sub_mul(u[i], u[r], q);
    }
    f.pivots.push_back(c);
    ++r;
  }
  f.rank = r;
  return f;
}

std::optional<IntegerSolution> solve_z_general(const MatrixZ& m, const VectorZ& b, size_t columns) {
  const size_t n = column_count(m, columns);
  if (b.size() != m.size()) throw InvalidArgument("right-hand side has the wrong length");
  // U * M^T = H, so M x = b becomes H^T y = b with x = U^T y.
  const HermiteForm f = hnf(transpose(m, n), m.size());
  VectorZ y(n, 0);
  for (size_t i = 0; i < f.rank; ++i) {
    const size_t c = f.pivots[i];
    Integer s = b[c];
    for (size_t k = 0; k < i; ++k) s -= f.h[k][c] * y[k];
    if (!mpz_divisible_p(s.get_mpz_t(), f.h[i][c].get_mpz_t())) return std::nullopt;
    mpz_divexact(y[i].get_mpz_t(), s.get_mpz_t(), f.h[i][c].get_mpz_t());
  }
  for (size_t j = 0; j < m.size(); ++j) {
    Integer s = 0;
    for (size_t i = 0; i < f.rank; ++i) s += f.h[i][j] * y[i];
    if (s != b[j]) return std::nullopt;
  }
  IntegerSolution sol;
  sol.x.assign(n, 0);
  for (size_t i = 0; i < f.rank; ++i)
    if (y[i] != 0)
      for (size_t j = 0; j < n; ++j) sol.x[j] += y[i] * f.u[i][j];
  for (size_t i = f.rank; i < n; ++i) sol.kernel.push_back(f.u[i]);
  return sol;
}

std::optional<VectorZ> solve_z(const MatrixZ& m, const VectorZ& b, size_t columns) {
  auto sol = solve_z_general(m, b, columns);
  if (!sol) return std::nullopt;
  return std::move(sol->x);
}

namespace {

using SparseRow = std::vector<LinearSystemZ::Entry>;

const Integer* coefficient(const SparseRow& row, size_t var) {
  auto it = std::lower_bound(row.begin(), row.end(), var,
                             [](const LinearSystemZ::Entry& e, size_t v) { return e.var < v; });
  return it != row.end() && it->var == var ? &it->coeff : nullptr;
}

// a - q * b on sorted sparse rows.
SparseRow combine(const SparseRow& a, const SparseRow& b, const Integer& q) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].var < b[j].var)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].var < a[i].var) {
      out.push_back({b[j].var, -q * b[j].coeff});
      ++j;
    } else {
      Integer v = a[i].coeff - q * b[j].coeff;
      if (v != 0) out.push_back({a[i].var, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Elimination {
  size_t pivot;
  Integer sign;  // coefficient of the pivot, +1 or -1
  SparseRow row;
  Integer rhs;
};

// General integer solution x0 + span(kernel) of a sparse system.
class SparseSolver {
 public:
  explicit SparseSolver(const LinearSystemZ& s) : n_(s.variables), rows_(s.rows), rhs_(s.rhs) {}

  // Returns false when the system has no integer solution. With protect > 0
  // the variables below it are never unit pivots, and the kernel is returned
  // restricted to them.
  bool run(bool want_kernel, size_t protect = 0) {
    protect_ = protect;
    cols_.assign(n_, {});
    active_.assign(rows_.size(), 1);
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (!normalize(i)) return false;
      for (const auto& e : rows_[i]) cols_[e.var].push_back(i);
    }
    eliminate_units();
    if (infeasible_) return false;
    return solve_residual(want_kernel);
  }

  VectorZ x0;
  MatrixZ kernel;

 private:
  // Divides row i by the gcd of its coefficients.
  bool normalize(size_t i) {
    auto& row = rows_[i];
    if (row.empty()) {
      active_[i] = 0;
      return rhs_[i] == 0;
    }
    Integer g = 0;
    for (const auto& e : row) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.coeff.get_mpz_t());
      if (g == 1) return true;
    }
    if (!mpz_divisible_p(rhs_[i].get_mpz_t(), g.get_mpz_t())) return false;
    for (auto& e : row) mpz_divexact(e.coeff.get_mpz_t(), e.coeff.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(rhs_[i].get_mpz_t(), rhs_[i].get_mpz_t(), g.get_mpz_t());
    return true;
  }

  size_t live_count(size_t var) {
    auto& list = cols_[var];
    std::erase_if(list, [&](size_t r) { return !active_[r] || coefficient(rows_[r], var) == nullptr; });
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list.size();
  }

  void eliminate_units() {
    bool progress = true;
    while (progress && !infeasible_) {
      progress = false;
      for (size_t i = 0; i < rows_.size() && !infeasible_; ++i) {
        if (!active_[i]) continue;
        size_t best = n_;
        size_t best_count = 0;
        for (const auto& e : rows_[i]) {
          if ((e.coeff != 1 && e.coeff != -1) || e.var < protect_) continue;
          const size_t count = live_count(e.var);
          if (best == n_ || count < best_count) {
            best = e.var;
            best_count = count;
          }
        }
        if (best == n_) continue;
        pivot(i, best);
        progress = true;
      }
    }
  }

  void pivot(size_t p, size_t var) {
    Elimination el{var, *coefficient(rows_[p], var), rows_[p], rhs_[p]};
    active_[p] = 0;
    const std::vector<size_t> targets = cols_[var];
    for (size_t r : targets) {
      if (r == p || !active_[r]) continue;
      const Integer* c = coefficient(rows_[r], var);
      if (!c) continue;
      const Integer q = *c * el.sign;
      rows_[r] = combine(rows_[r], el.row, q);
      rhs_[r] -= q * el.rhs;
      for (const auto& e : rows_[r]) cols_[e.var].push_back(r);
      if (!normalize(r)) {
        infeasible_ = true;
        return;
      }
    }
    cols_[var].clear();
    eliminated_.push_back(std::move(el));
  }

  bool solve_residual(bool want_kernel) {
    std::vector<size_t> residual_rows;
    std::vector<long> local(n_, -1);
    std::vector<size_t> vars;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (!active_[i]) continue;
      residual_rows.push_back(i);
      for (const auto& e : rows_[i])
        if (local[e.var] < 0) {
          local[e.var] = static_cast<long>(vars.size());
          vars.push_back(e.var);
        }
    }
    std::vector<char> pivoted(n_, 0);
    for (const auto& el : eliminated_) pivoted[el.pivot] = 1;

    if (protect_ > 0) return solve_protected(residual_rows, vars, local, pivoted, want_kernel);

    MatrixZ dense(residual_rows.size(), VectorZ(vars.size(), 0));
    VectorZ b(residual_rows.size());
    for (size_t k = 0; k < residual_rows.size(); ++k) {
      for (const auto& e : rows_[residual_rows[k]]) dense[k][static_cast<size_t>(local[e.var])] = e.coeff;
      b[k] = rhs_[residual_rows[k]];
    }
    auto sol = solve_z_general(dense, b, vars.size());
    if (!sol) return false;

    x0.assign(n_, 0);
    for (size_t k = 0; k < vars.size(); ++k) x0[vars[k]] = sol->x[k];
    back_substitute(x0, true);

    if (want_kernel) {
      for (const auto& kv : sol->kernel) {
        VectorZ v(n_, 0);
        for (size_t k = 0; k < vars.size(); ++k) v[vars[k]] = kv[k];
        back_substitute(v, false);
        kernel.push_back(std::move(v));
      }
      for (size_t var = 0; var < n_; ++var) {
        if (pivoted[var] || local[var] >= 0) continue;
        VectorZ v(n_, 0);
        v[var] = 1;
        back_substitute(v, false);
        kernel.push_back(std::move(v));
      }
    }
    return true;
  }

  // Pivots are all at or above protect_, so the protected coordinates of a
  // kernel vector come straight from the residual system.
  bool solve_protected(const std::vector<size_t>& residual_rows, const std::vector<size_t>& vars,
                       const std::vector<long>& local, const std::vector<char>& pivoted, bool want_kernel) {
    LinearSystemZ sub;
    sub.variables = vars.size();
    for (size_t r : residual_rows) {
      SparseRow row;
      for (const auto& e : rows_[r]) row.push_back({static_cast<size_t>(local[e.var]), e.coeff});
      sub.add_equation(std::move(row), rhs_[r]);
    }
    SparseSolver inner(sub);
    if (!inner.run(want_kernel)) return false;
    x0.assign(n_, 0);
    for (size_t k = 0; k < vars.size(); ++k) x0[vars[k]] = inner.x0[k];
    back_substitute(x0, true);
    if (!want_kernel) return true;
    for (const auto& kv : inner.kernel) {
      VectorZ v(protect_, 0);
      bool nonzero = false;
      for (size_t k = 0; k < vars.size(); ++k)
        if (vars[k] < protect_ && kv[k] != 0) {
          v[vars[k]] = kv[k];
          nonzero = true;
        }
      if (nonzero) kernel.push_back(std::move(v));
    }
    for (size_t var = 0; var < protect_; ++var) {
      if (pivoted[var] || local[var] >= 0) continue;
      VectorZ v(protect_, 0);
      v[var] = 1;
      kernel.push_back(std::move(v));
    }
    return true;
  }

  void back_substitute(VectorZ& x, bool affine) const {
    for (auto it = eliminated_.rbegin(); it != eliminated_.rend(); ++it) {
      Integer s = affine ? it->rhs : Integer(0);
      for (const auto& e : it->row)
        if (e.var != it->pivot) s -= e.coeff * x[e.var];
      x[it->pivot] = s * it->sign;
    }
  }

  size_t n_;
  size_t protect_ = 0;
  std::vector<SparseRow> rows_;
  VectorZ rhs_;
  std::vector<std::vector<size_t>> cols_;
  std::vector<char> active_;
  std::vector<Elimination> eliminated_;
  bool infeasible_ = false;
};

}  // namespace

std::optional<VectorZ> solve_z(const LinearSystemZ& system) {
  SparseSolver s(system);
  if (!s.run(false)) return std::nullopt;
  return std::move(s.x0);
}

AipEncoding encode_aip(const RelationalStructure& a, const RelationalStructure& b) {
  if (!a.signature().same_as(b.signature())) throw InvalidArgument("instance and template signatures differ");
  AipEncoding enc;
  enc.values = b.size;
  enc.instance_elements = static_cast<size_t>(a.size);
  auto& sys = enc.system;
  sys.variables = static_cast<size_t>(a.size) * static_cast<size_t>(b.size);
  for (Element v = 0; v < a.size; ++v) {
    std::vector<LinearSystemZ::Entry> row;
    for (Element x = 0; x < b.size; ++x) row.push_back({enc.value_variable(v, x), 1});
    sys.add_equation(std::move(row), 1);
  }
  for (const auto& ra : a.relations) {
    const Relation* rb = b.find(ra.name);
    const size_t k = static_cast<size_t>(ra.arity);
    for (size_t c = 0; c < ra.size(); ++c) {
      const auto scope = ra.tuple(c);
      const size_t first = sys.variables;
      sys.variables += rb->size();
      std::vector<LinearSystemZ::Entry> total;
      for (size_t t = 0; t < rb->size(); ++t) total.push_back({first + t, 1});
      sys.add_equation(std::move(total), 1);
      for (size_t i = 0; i < k; ++i) {
        for (Element x = 0; x < b.size; ++x) {
          std::vector<LinearSystemZ::Entry> row;
          for (size_t t = 0; t < rb->size(); ++t)
            if (rb->tuple(t)[i] == x) row.push_back({first + t, 1});
          row.push_back({enc.value_variable(scope[i], x), -1});
          sys.add_equation(std::move(row), 0);
        }
      }
    }
  }
  return enc;
}

bool aip_decide(const RelationalStructure& a, const RelationalStructure& b) {
  return solve_z(encode_aip(a, b).system).has_value();
}

AipSession::AipSession(const RelationalStructure& a, const RelationalStructure& b) : values_(b.size) {
  const AipEncoding enc = encode_aip(a, b);
  SparseSolver s(enc.system);
  const size_t nv = static_cast<size_t>(a.size) * static_cast<size_t>(b.size);
  feasible_ = s.run(true, nv);
  if (!feasible_) return;
  x0_.assign(s.x0.begin(), s.x0.begin() + static_cast<long>(nv));
  for (auto& k : s.kernel) {
    k.resize(nv);
    if (std::any_of(k.begin(), k.end(), [](const Integer& v) { return v != 0; })) basis_.push_back(std::move(k));
  }
}

VectorZ AipSession::values_of(Element v) const {
  const size_t lo = static_cast<size_t>(v) * static_cast<size_t>(values_);
  return VectorZ(x0_.begin() + static_cast<long>(lo), x0_.begin() + static_cast<long>(lo + static_cast<size_t>(values_)));
}

bool AipSession::try_pin(Element v, Element b) {
  if (!feasible_) return false;
  const size_t lo = static_cast<size_t>(v) * static_cast<size_t>(values_);
  const size_t width = static_cast<size_t>(values_);

  // Row-reduce the generators on the columns of v. The lattice they span
  // does not change, so nothing needs undoing on failure.
  std::vector<size_t> pivot_rows;
  std::vector<size_t> pivot_cols;
  size_t next = 0;  // generators before `next` are pivots
  for (size_t c = lo; c < lo + width; ++c) {
    while (true) {
      size_t best = basis_.size();
      for (size_t i = next; i < basis_.size(); ++i)
        if (basis_[i][c] != 0 && (best == basis_.size() || abs(basis_[i][c]) < abs(basis_[best][c]))) best = i;
      if (best == basis_.size()) break;
      std::swap(basis_[best], basis_[next]);
      bool clean = true;
      for (size_t i = next + 1; i < basis_.size(); ++i) {
        if (basis_[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), basis_[i][c].get_mpz_t(), basis_[next][c].get_mpz_t());
        sub_mul(basis_[i], basis_[next], q);
        if (basis_[i][c] != 0) clean = false;
      }
      if (clean) {
        pivot_rows.push_back(next);
        pivot_cols.push_back(c);
        ++next;
        break;
      }
    }
  }

  VectorZ target(width);
  for (size_t j = 0; j < width; ++j) target[j] = (static_cast<Element>(j) == b ? 1 : 0) - x0_[lo + j];
  VectorZ z(pivot_rows.size());
  for (size_t k = 0; k < pivot_rows.size(); ++k) {
    const auto& row = basis_[pivot_rows[k]];
    const size_t c = pivot_cols[k] - lo;
    if (!mpz_divisible_p(target[c].get_mpz_t(), row[lo + c].get_mpz_t())) return false;
    mpz_divexact(z[k].get_mpz_t(), target[c].get_mpz_t(), row[lo + c].get_mpz_t());
    for (size_t j = 0; j < width; ++j) target[j] -= z[k] * row[lo + j];
  }
  for (const auto& t : target)
    if (t != 0) return false;

  for (size_t k = 0; k < pivot_rows.size(); ++k) {
    if (z[k] == 0) continue;
    const auto& row = basis_[pivot_rows[k]];
    for (size_t j = 0; j < x0_.size(); ++j)
      if (row[j] != 0) x0_[j] += z[k] * row[j];
  }
  basis_.erase(basis_.begin(), basis_.begin() + static_cast<long>(next));
  std::erase_if(basis_, [](const VectorZ& r) { return std::all_of(r.begin(), r.end(), [](const Integer& v) { return v == 0; }); });
  return true;
}

}  // namespace polymeta
