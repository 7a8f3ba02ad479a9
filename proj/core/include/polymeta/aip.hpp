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

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polymeta/structure.hpp"

namespace polymeta {

using Integer = mpz_class;
using VectorZ = std::vector<Integer>;
/// Dense row-major matrix.
using MatrixZ = std::vector<VectorZ>;

MatrixZ identity_matrix(std::size_t n);
MatrixZ multiply(const MatrixZ& a, const MatrixZ& b);
VectorZ multiply(const MatrixZ& a, const VectorZ& x);
MatrixZ transpose(const MatrixZ& m, std::size_t columns = 0);
/// Exact determinant (fraction-free elimination).
Integer determinant(const MatrixZ& m);

/// Rows separated by newlines, entries by single spaces.
std::string to_text(const MatrixZ& m);
/// Inverse of to_text; throws ParseError.
MatrixZ parse_matrix(std::string_view text);

/// A sparse system of integer equations sum_j a_ij x_j = b_i.
struct LinearSystemZ {
  struct Entry {
    std::size_t var;
    Integer coeff;
  };
  std::size_t variables = 0;
  std::vector<std::vector<Entry>> rows;
  VectorZ rhs;

  std::size_t add_variable() { return variables++; }
  void add_equation(std::vector<Entry> row, Integer b);
  std::size_t equations() const { return rows.size(); }

  MatrixZ matrix() const;
  bool satisfied_by(const VectorZ& x) const;
};

/// Row-style Hermite normal form: U * M = H with U unimodular, the nonzero
/// rows of H first, each pivot positive and every entry above a pivot in
/// [0, pivot).
struct HermiteForm {
  MatrixZ h;
  MatrixZ u;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// `columns` is only needed when `m` has no rows.
HermiteForm hnf(const MatrixZ& m, std::size_t columns = 0);

/// Integer solution of M x = b together with a basis of the integer kernel.
struct IntegerSolution {
  VectorZ x;
  MatrixZ kernel;  // each row is a kernel vector
};

std::optional<IntegerSolution> solve_z_general(const MatrixZ& m, const VectorZ& b, std::size_t columns = 0);
std::optional<VectorZ> solve_z(const MatrixZ& m, const VectorZ& b, std::size_t columns = 0);
/// Sparse elimination of unit pivots, then dense Hermite reduction of what
/// remains.
std::optional<VectorZ> solve_z(const LinearSystemZ& system);

/// Variable layout of encode_aip().
struct AipEncoding {
  LinearSystemZ system;
  Element values = 0;                       // |B|
  std::size_t instance_elements = 0;        // |A|
  /// w(v, b) is variable v * values + b.
  std::size_t value_variable(Element v, Element b) const {
    return static_cast<std::size_t>(v) * static_cast<std::size_t>(values) + static_cast<std::size_t>(b);
  }
};

/// The affine relaxation of CSP(B) on instance A: unknowns w(v,b) for every
/// element v of A and value b, and w(c,t) for every constraint c of A and
/// tuple t of the matching relation of B.
AipEncoding encode_aip(const RelationalStructure& a, const RelationalStructure& b);

/// True iff encode_aip(a, b) has an integer solution.
bool aip_decide(const RelationalStructure& a, const RelationalStructure& b);

/// Incremental form of aip_decide for self-reduction: starting from (A, B),
/// try_pin(v, b) answers what aip_decide would answer on A expanded by the
/// unary constraint v in {b}, and keeps the pin when the answer is yes.
class AipSession {
 public:
  AipSession(const RelationalStructure& a, const RelationalStructure& b);

  bool feasible() const { return feasible_; }
  bool try_pin(Element v, Element b);
  /// Current integer values of w(v, .) (only meaningful when feasible).
  VectorZ values_of(Element v) const;

 private:
  Element values_ = 0;
  bool feasible_ = false;
  VectorZ x0_;     // particular solution, vertex variables only
  MatrixZ basis_;  // rows: kernel generators restricted to vertex variables
};

}  // namespace polymeta
