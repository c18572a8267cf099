// Copyright 2026 The fgeom Authors.
//
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

#ifndef FGEOM_LINALG_HPP_
#define FGEOM_LINALG_HPP_

#include <optional>
#include <span>
#include <vector>

#include "fgeom/gf.hpp"

namespace fgeom {

using Vec = std::vector<Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  // Rows given as vectors of equal length.
  static Matrix from_rows(const std::vector<Vec>& rows, int cols);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem& operator()(int r, int c) { return data_[r * cols_ + c]; }
  Elem operator()(int r, int c) const { return data_[r * cols_ + c]; }
  Vec row(int r) const;
  Vec column(int c) const;
  void set_column(int c, std::span<const Elem> values);
  std::span<const Elem> data() const { return data_; }
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

bool is_zero(std::span<const Elem> v);
// Index of the leftmost nonzero entry, or -1.
int leading_index(std::span<const Elem> v);
// Scales v so that its leftmost nonzero entry is 1; the zero vector is
// returned unchanged.
Vec normalized(const Field& f, Vec v);
Vec scaled(const Field& f, Elem s, std::span<const Elem> v);
Vec added(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
// a - s * b
Vec axpy_sub(const Field& f, std::span<const Elem> a, Elem s,
             std::span<const Elem> b);
// Entrywise image under a field map.
Vec apply_hom(const FieldHom& h, std::span<const Elem> v);
Matrix apply_hom(const FieldHom& h, const Matrix& m);

Vec mat_vec(const Field& f, const Matrix& m, std::span<const Elem> v);
Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b);

int rank(const Field& f, std::vector<Vec> rows);
// Basis of {x : m x = 0}, one vector per free column of rref(m).
std::vector<Vec> kernel_basis(const Field& f, const Matrix& m);
// Some x with m x = b, if one exists.
std::optional<Vec> solve(const Field& f, const Matrix& m,
                         std::span<const Elem> b);

// A subspace W of K^ambient held as a reduced row-echelon basis: pivots
// strictly increase, every pivot entry is 1, and pivot columns are zero in
// all other rows.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  LinearSubspace(FieldPtr field, int ambient);

  static LinearSubspace span(FieldPtr field, int ambient,
                             const std::vector<Vec>& generators);
  static LinearSubspace whole(FieldPtr field, int ambient);

  const FieldPtr& field() const { return field_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }
  // Non-pivot columns; coordinates of the canonical complement.
  std::vector<int> free_columns() const;

  // Returns true if v was outside the subspace (the dimension grew).
  bool insert(std::span<const Elem> v);
  bool contains(std::span<const Elem> v) const;
  // Canonical representative of v + W: pivot entries cleared.
  Vec reduce(std::span<const Elem> v) const;
  // Coordinates of v + W in V/W, read off the free columns of reduce(v).
  Vec quotient_coords(std::span<const Elem> v) const;
  // Inverse of quotient_coords on the canonical complement.
  Vec lift(std::span<const Elem> coords) const;
  // Linear functionals (as vectors) vanishing exactly on W.
  std::vector<Vec> annihilator() const;

  LinearSubspace join(const LinearSubspace& other) const;
  LinearSubspace meet(const LinearSubspace& other) const;
  // Span of the unit vectors at free columns.
  LinearSubspace canonical_complement() const;
  bool is_subspace_of(const LinearSubspace& other) const;

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  FieldPtr field_;
  int ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

}  // namespace fgeom

#endif  // FGEOM_LINALG_HPP_
