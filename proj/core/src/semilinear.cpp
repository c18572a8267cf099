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

#include <algorithm>

#include "fgeom/error.hpp"
#include "fgeom/projective.hpp"

namespace fgeom {

SemilinearMap::SemilinearMap(FieldHom sigma, Matrix matrix)
    : sigma_(std::move(sigma)), matrix_(std::move(matrix)) {
  const int q = sigma_.target()->order();
  for (Elem e : matrix_.data()) {
    if (e >= q) {
      throw Error(ErrorCode::kInvalidArgument,
                  "matrix entry outside " + sigma_.target()->name());
    }
  }
}

Vec SemilinearMap::apply(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != source_coords()) {
    throw Error(ErrorCode::kInvalidArgument, "vector length mismatch");
  }
  return mat_vec(*target_field(), matrix_, apply_hom(sigma_, v));
}

SemilinearMap SemilinearMap::scaled(Elem lambda) const {
  const Field& f = *target_field();
  Matrix m = matrix_;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) m(r, c) = f.mul(lambda, m(r, c));
  }
  return {sigma_, std::move(m)};
}

Elem SemilinearMap::canonical_scalar() const {
  for (Elem e : matrix_.data()) {
    if (e != 0) return target_field()->inv(e);
  }
  return 1;
}

SemilinearMap SemilinearMap::canonical() const {
  return scaled(canonical_scalar());
}

SemilinearMap SemilinearMap::then(const SemilinearMap& after) const {
  if (after.source_field() != target_field() ||
      after.source_coords() != target_coords()) {
    throw Error(ErrorCode::kFieldMismatch, "maps do not compose");
  }
  Matrix m = mat_mul(*after.target_field(), after.matrix_,
                     apply_hom(after.sigma_, matrix_));
  return {sigma_.then(after.sigma_), std::move(m)};
}

LinearSubspace SemilinearMap::kernel() const {
  const Field& k = *source_field();
  const Field& kp = *target_field();
  const int d = kp.degree() / k.degree();
  // Coordinates of every element of K' in the basis 1, g, ..., g^(d-1) over
  // sigma(K), where g generates K' over its prime field.
  std::vector<Elem> image;
  for (int a = 0; a < k.order(); ++a) image.push_back(sigma_(static_cast<Elem>(a)));
  const Elem g = kp.degree() == 1 ? Elem{1} : kp.generator();
  std::vector<Vec> coords(kp.order());
  std::vector<bool> seen(kp.order(), false);
  const int combos = kp.order();
  for (int c = 0; c < combos; ++c) {
    int r = c;
    Elem e = 0;
    Elem power = 1;
    Vec tuple(d);
    for (int t = 0; t < d; ++t) {
      tuple[t] = image[r % k.order()];
      r /= k.order();
      e = kp.add(e, kp.mul(tuple[t], power));
      power = kp.mul(power, g);
    }
    if (seen[e]) {
      throw Error(ErrorCode::kInternalContradiction,
                  "powers of the generator are dependent over sigma(K)");
    }
    seen[e] = true;
    coords[e] = std::move(tuple);
  }
  Matrix big(matrix_.rows() * d, matrix_.cols());
  for (int i = 0; i < matrix_.rows(); ++i) {
    for (int j = 0; j < matrix_.cols(); ++j) {
      const Vec& t = coords[matrix_(i, j)];
      for (int s = 0; s < d; ++s) big(i * d + s, j) = *sigma_.preimage(t[s]);
    }
  }
  return LinearSubspace::span(source_field(), source_coords(),
                              kernel_basis(k, big));
}

}  // namespace fgeom
