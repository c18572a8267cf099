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

#include "fgeom/linalg.hpp"

#include <algorithm>
#include <utility>

#include "fgeom/error.hpp"

namespace fgeom {

Matrix Matrix::from_rows(const std::vector<Vec>& rows, int cols) {
  Matrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols) {
      throw Error(ErrorCode::kInvalidArgument, "ragged matrix rows");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vec Matrix::row(int r) const {
  return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vec Matrix::column(int c) const {
  Vec v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_column(int c, std::span<const Elem> values) {
  for (int r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

bool Matrix::is_zero() const { return fgeom::is_zero(data_); }

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

int leading_index(std::span<const Elem> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Vec normalized(const Field& f, Vec v) {
  const int lead = leading_index(v);
  if (lead < 0 || v[lead] == 1) return v;
  const Elem s = f.inv(v[lead]);
  for (auto& e : v) e = f.mul(e, s);
  return v;
}

Vec scaled(const Field& f, Elem s, std::span<const Elem> v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(s, v[i]);
  return out;
}

Vec added(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec axpy_sub(const Field& f, std::span<const Elem> a, Elem s,
             std::span<const Elem> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = f.sub(a[i], f.mul(s, b[i]));
  }
  return out;
}

Vec apply_hom(const FieldHom& h, std::span<const Elem> v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = h(v[i]);
  return out;
}

Matrix apply_hom(const FieldHom& h, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out(r, c) = h(m(r, c));
  }
  return out;
}

Vec mat_vec(const Field& f, const Matrix& m, std::span<const Elem> v) {
  Vec out(m.rows(), 0);
  for (int r = 0; r < m.rows(); ++r) {
    Elem acc = 0;
    for (int c = 0; c < m.cols(); ++c) acc = f.add(acc, f.mul(m(r, c), v[c]));
    out[r] = acc;
  }
  return out;
}

Matrix mat_mul(const Field& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kInvalidArgument, "matrix shapes do not compose");
  }
  Matrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < b.cols(); ++c) {
      Elem acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc = f.add(acc, f.mul(a(r, k), b(k, c)));
      out(r, c) = acc;
    }
  }
  return out;
}

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref_in_place(const Field& f, std::vector<Vec>& rows,
                               int cols) {
  std::vector<int> pivots;
  std::size_t top = 0;
  for (int c = 0; c < cols && top < rows.size(); ++c) {
    std::size_t sel = top;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[top], rows[sel]);
    const Elem inv = f.inv(rows[top][c]);
    for (auto& e : rows[top]) e = f.mul(e, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][c] == 0) continue;
      rows[r] = axpy_sub(f, rows[r], rows[r][c], rows[top]);
    }
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  return pivots;
}

}  // namespace

int rank(const Field& f, std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  const int cols = static_cast<int>(rows.front().size());
  return static_cast<int>(rref_in_place(f, rows, cols).size());
}

std::vector<Vec> kernel_basis(const Field& f, const Matrix& m) {
  std::vector<Vec> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  const auto pivots = rref_in_place(f, rows, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      x[pivots[r]] = f.neg(rows[r][free]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve(const Field& f, const Matrix& m,
                         std::span<const Elem> b) {
  std::vector<Vec> rows;
  for (int r = 0; r < m.rows(); ++r) {
    Vec row = m.row(r);
    row.push_back(b[r]);
    rows.push_back(std::move(row));
  }
  const auto pivots = rref_in_place(f, rows, m.cols() + 1);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][m.cols()];
  return x;
}

LinearSubspace::LinearSubspace(FieldPtr field, int ambient)
    : field_(std::move(field)), ambient_(ambient) {}

LinearSubspace LinearSubspace::span(FieldPtr field, int ambient,
                                    const std::vector<Vec>& generators) {
  LinearSubspace w(std::move(field), ambient);
  for (const auto& g : generators) w.insert(g);
  return w;
}

LinearSubspace LinearSubspace::whole(FieldPtr field, int ambient) {
  LinearSubspace w(std::move(field), ambient);
  for (int i = 0; i < ambient; ++i) {
    Vec e(ambient, 0);
    e[i] = 1;
    w.rows_.push_back(std::move(e));
    w.pivots_.push_back(i);
  }
  return w;
}

std::vector<int> LinearSubspace::free_columns() const {
  std::vector<int> out;
  std::size_t next_pivot = 0;
  for (int c = 0; c < ambient_; ++c) {
    if (next_pivot < pivots_.size() && pivots_[next_pivot] == c) {
      ++next_pivot;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vec LinearSubspace::reduce(std::span<const Elem> v) const {
  const Field& f = *field_;
  Vec out(v.begin(), v.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Elem c = out[pivots_[r]];
    if (c == 0) continue;
    for (int i = 0; i < ambient_; ++i) {
      out[i] = f.sub(out[i], f.mul(c, rows_[r][i]));
    }
  }
  return out;
}

bool LinearSubspace::contains(std::span<const Elem> v) const {
  return is_zero(reduce(v));
}

bool LinearSubspace::insert(std::span<const Elem> v) {
  if (static_cast<int>(v.size()) != ambient_) {
    throw Error(ErrorCode::kInvalidArgument, "vector length mismatch");
  }
  const Field& f = *field_;
  Vec r = reduce(v);
  const int lead = leading_index(r);
  if (lead < 0) return false;
  r = normalized(f, std::move(r));
  for (auto& row : rows_) {
    if (row[lead] != 0) row = axpy_sub(f, row, row[lead], r);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + idx, std::move(r));
  return true;
}

Vec LinearSubspace::quotient_coords(std::span<const Elem> v) const {
  const Vec r = reduce(v);
  Vec out;
  out.reserve(ambient_ - rows_.size());
  for (int c : free_columns()) out.push_back(r[c]);
  return out;
}

Vec LinearSubspace::lift(std::span<const Elem> coords) const {
  const auto free = free_columns();
  if (coords.size() != free.size()) {
    throw Error(ErrorCode::kInvalidArgument, "quotient coordinate mismatch");
  }
  Vec out(ambient_, 0);
  for (std::size_t i = 0; i < free.size(); ++i) out[free[i]] = coords[i];
  return out;
}

std::vector<Vec> LinearSubspace::annihilator() const {
  return kernel_basis(*field_, Matrix::from_rows(rows_, ambient_));
}

LinearSubspace LinearSubspace::join(const LinearSubspace& other) const {
  LinearSubspace out = *this;
  for (const auto& r : other.rows_) out.insert(r);
  return out;
}

LinearSubspace LinearSubspace::meet(const LinearSubspace& other) const {
  auto constraints = annihilator();
  for (auto& a : other.annihilator()) constraints.push_back(std::move(a));
  if (constraints.empty()) return whole(field_, ambient_);
  return span(field_, ambient_,
              kernel_basis(*field_, Matrix::from_rows(constraints, ambient_)));
}

LinearSubspace LinearSubspace::canonical_complement() const {
  LinearSubspace out(field_, ambient_);
  for (int c : free_columns()) {
    Vec e(ambient_, 0);
    e[c] = 1;
    out.insert(e);
  }
  return out;
}

bool LinearSubspace::is_subspace_of(const LinearSubspace& other) const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [&](const Vec& r) { return other.contains(r); });
}

}  // namespace fgeom
