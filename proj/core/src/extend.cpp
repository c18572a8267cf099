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

#include "fgeom/error.hpp"
#include "fgeom/reconstruct.hpp"

namespace fgeom {

AffinoExtension extend_affino(const SpacePtr& src, const SpacePtr& dst,
                              const PointSet& domain,
                              std::span<const int> map) {
  if (!field_clause_holds(src->f(), dst->f())) {
    throw Error(ErrorCode::kFieldClauseViolated,
                "needs |K| >= 4 or |K| = 3 = char K'");
  }
  if (static_cast<int>(map.size()) != src->size() || domain.universe() != src->size()) {
    throw Error(ErrorCode::kInvalidArgument, "map must be indexed by source points");
  }
  AffinoExtension out;
  out.map.assign(map.begin(), map.end());
  const PointSet missing = src->all_points() - domain;
  missing.for_each([&](int p) { out.map[p] = -1; });
  if (!missing.empty()) {
    const auto& hyperplanes = src->hyperplanes();
    for (std::size_t h = 0; h < hyperplanes.size() && out.hyperplane < 0; ++h) {
      if (missing.is_subset_of(src->hyperplane_points(static_cast<int>(h)))) {
        out.hyperplane = static_cast<int>(h);
      }
    }
    if (out.hyperplane < 0) {
      throw Error(ErrorCode::kInvalidArgument, "domain is not affino-projective");
    }
    const PointSet h = src->hyperplane_points(out.hyperplane);
    const int m1 = dst->ambient_dim() + 1;
    missing.for_each([&](int p) {
      std::optional<LinearSubspace> common;
      for (int l : src->lines_through(p)) {
        const PointSet& line = src->lines()[l];
        if (line.is_subset_of(h)) continue;
        const PointSet met = line & domain;
        if (met.count() < 2) continue;
        LinearSubspace s(dst->field(), m1);
        met.for_each([&](int y) {
          if (map[y] >= 0) s.insert(dst->coords(map[y]));
        });
        common = common ? common->meet(s) : s;
      }
      if (!common || common->dim() > 1) {
        throw Error(ErrorCode::kInconsistentExtension,
                    "no unique image for point " + std::to_string(p));
      }
      out.map[p] = common->dim() == 1 ? dst->point_of(common->basis()[0]) : -1;
    });
  }
  out.exceptional = PointSet(src->size());
  LinearSubspace e(src->field(), src->ambient_dim() + 1);
  for (int p = 0; p < src->size(); ++p) {
    if (out.map[p] < 0) {
      out.exceptional.set(p);
      e.insert(src->coords(p));
    }
  }
  if (src->points_in(e) != out.exceptional) {
    throw Error(ErrorCode::kExceptionalNotFlat,
                "undefined points of the extension do not form a flat");
  }
  return out;
}

AffinoExtension extend_affino(const MorphismInstance& phi) {
  const EmbeddedGeometry& x = *phi.domain;
  const SpacePtr pg = x.ambient();
  std::vector<int> full(pg->size(), -1);
  for (int p = 0; p < x.size(); ++p) full[x.ambient_index(p)] = phi.map[p];
  AffinoExtension ext =
      extend_affino(pg, phi.target, x.to_ambient(x.all_points()), full);
  for (int p = 0; p < x.size(); ++p) {
    if (ext.map[x.ambient_index(p)] != phi.map[p]) {
      throw Error(ErrorCode::kInconsistentExtension, "extension changes the map on X");
    }
  }
  return ext;
}

}  // namespace fgeom
