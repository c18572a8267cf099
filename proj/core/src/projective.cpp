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

#include "fgeom/projective.hpp"

#include "fgeom/error.hpp"

namespace fgeom {

std::optional<int> apply_semilinear(const SemilinearMap& phi,
                                    const ProjectiveSpace& dst,
                                    std::span<const Elem> v) {
  const Vec w = phi.apply(v);
  if (is_zero(w)) return std::nullopt;
  return dst.point_of(w);
}

std::vector<int> induced_point_map(const SemilinearMap& phi,
                                   const ProjectiveSpace& src,
                                   const ProjectiveSpace& dst) {
  if (phi.source_field() != src.field() || phi.target_field() != dst.field() ||
      phi.source_coords() != src.ambient_dim() + 1 ||
      phi.target_coords() != dst.ambient_dim() + 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "semilinear map does not fit the given spaces");
  }
  std::vector<int> out(src.size());
  for (int x = 0; x < src.size(); ++x) {
    out[x] = apply_semilinear(phi, dst, src.coords(x)).value_or(-1);
  }
  return out;
}

std::optional<Elem> proportional(const SemilinearMap& a,
                                 const SemilinearMap& b) {
  if (!(a.sigma() == b.sigma()) || a.matrix().rows() != b.matrix().rows() ||
      a.matrix().cols() != b.matrix().cols()) {
    return std::nullopt;
  }
  const auto da = a.matrix().data();
  const auto db = b.matrix().data();
  std::size_t i = 0;
  while (i < da.size() && da[i] == 0) ++i;
  if (i == da.size()) {
    if (b.is_zero()) return Elem{1};
    return std::nullopt;
  }
  if (db[i] == 0) return std::nullopt;
  const Elem lambda = a.target_field()->div(db[i], da[i]);
  if (a.scaled(lambda) == b) return lambda;
  return std::nullopt;
}

ProjPartialMap induced_partial(const SemilinearMap& phi, const SpacePtr& src,
                               const SpacePtr& dst) {
  if (phi.is_zero()) throw Error(ErrorCode::kZeroMap, "semilinear map is 0");
  LinearSubspace ker = phi.kernel();
  PartialMorphism m{src, dst, src->points_in(ker),
                    induced_point_map(phi, *src, *dst)};
  return {phi, std::move(ker), std::move(m)};
}

SemilinearMap quotient_linear_map(const FieldPtr& field, int ambient,
                                  const LinearSubspace& w) {
  const std::vector<int> free = w.free_columns();
  Matrix m(static_cast<int>(free.size()), ambient);
  for (std::size_t r = 0; r < free.size(); ++r) {
    m(static_cast<int>(r), free[r]) = 1;
    for (std::size_t i = 0; i < w.basis().size(); ++i) {
      m(static_cast<int>(r), w.pivots()[i]) = field->neg(w.basis()[i][free[r]]);
    }
  }
  return {FieldHom::identity(field), std::move(m)};
}

QuotientIso quotient_iso(const SpacePtr& pg, const LinearSubspace& w) {
  if (w.ambient() != pg->ambient_dim() + 1 || w.dim() > pg->ambient_dim()) {
    throw Error(ErrorCode::kInvalidArgument,
                "quotient needs a proper subspace of the coordinate space");
  }
  QuotientIso iso{quotient(pg, pg->points_in(w)),
                  ProjectiveSpace::get(pg->ambient_dim() - w.dim(), pg->field()),
                  w,
                  {},
                  {},
                  false};
  const QuotientGeometry& qg = *iso.quotient.geometry;
  iso.class_to_point.assign(qg.size(), -1);
  iso.point_to_class.assign(iso.target->size(), -1);
  bool ok = qg.size() == iso.target->size();
  for (int x = 0; x < pg->size() && ok; ++x) {
    const int c = qg.class_of(x);
    if (c < 0) continue;
    const int t = iso.target->point_of(w.quotient_coords(pg->coords(x)));
    if (iso.class_to_point[c] < 0) {
      if (iso.point_to_class[t] >= 0) ok = false;
      iso.class_to_point[c] = t;
      iso.point_to_class[t] = c;
    } else if (iso.class_to_point[c] != t) {
      ok = false;
    }
  }
  // Lines of the quotient go to lines of the target.
  for (int a = 0; a < qg.size() && ok; ++a) {
    for (int b = a + 1; b < qg.size() && ok; ++b) {
      const PointSet l = qg.closure_of({a, b});
      PointSet mapped(iso.target->size());
      l.for_each([&](int c) { mapped.set(iso.class_to_point[c]); });
      ok = mapped == iso.target->closure_of(
                         {iso.class_to_point[a], iso.class_to_point[b]});
    }
  }
  iso.verified = ok;
  return iso;
}

}  // namespace fgeom
