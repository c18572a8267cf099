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

#ifndef FGEOM_EMBEDDED_HPP_
#define FGEOM_EMBEDDED_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fgeom/geometry.hpp"
#include "fgeom/linalg.hpp"

namespace fgeom {

class ProjectiveSpace;
class EmbeddedGeometry;
using EmbeddedPtr = std::shared_ptr<const EmbeddedGeometry>;
using SpacePtr = std::shared_ptr<const ProjectiveSpace>;

// A point set X of PG(n,q) with the induced geometry: closure(A) is the
// span of A intersected with X. Points are stored normalized (leftmost
// nonzero coordinate 1) and sorted lexicographically by coordinates, so the
// point index order is canonical.
class EmbeddedGeometry : public Geometry {
 public:
  // Throws kInvalidArgument on zero vectors, wrong lengths, out-of-range
  // entries, or points that coincide after normalization.
  EmbeddedGeometry(FieldPtr field, int ambient_dim, std::vector<Vec> points);

  const FieldPtr& field() const { return field_; }
  const Field& f() const { return *field_; }
  // n, for X inside PG(n,q); coordinate vectors have n+1 entries.
  int ambient_dim() const { return ambient_dim_; }
  const Vec& coords(int point) const { return coords_[point]; }
  const std::vector<Vec>& all_coords() const { return coords_; }
  // Normalizes v first; nullopt if v is zero or not a point of X.
  std::optional<int> index_of(std::span<const Elem> v) const;

  PointSet closure(const PointSet& a) const override;
  int rank(const PointSet& s) const override;

  LinearSubspace span_of(const PointSet& s) const;
  // Points of X lying in P(w).
  PointSet points_in(const LinearSubspace& w) const;

  SpacePtr ambient() const;
  int ambient_index(int point) const;
  PointSet to_ambient(const PointSet& local) const;
  // Points of X among the given ambient points.
  PointSet from_ambient(const PointSet& ambient_set) const;
  EmbeddedPtr restrict_to(const PointSet& subset) const;

  // Base-q big-endian integer of a normalized vector; ascending keys are
  // lexicographic coordinate order.
  std::uint64_t key(std::span<const Elem> v) const;

 private:
  FieldPtr field_;
  int ambient_dim_;
  std::vector<Vec> coords_;
  std::unordered_map<std::uint64_t, int> index_;
  mutable std::once_flag ambient_once_;
  mutable std::vector<int> ambient_index_;
};

// PG(n,q) = P(K^(n+1)). Instances are interned per (n, q).
class ProjectiveSpace : public EmbeddedGeometry {
 public:
  static constexpr std::int64_t kMaxPoints = 100'000;

  // Throws kSizeLimit beyond desk scale (n outside [0,5] or too many points).
  // PG(0,q) is a single point and only arises as a quotient.
  static SpacePtr get(int n, const FieldPtr& field);
  static std::int64_t point_count(int n, int q);

  int dimension() const { return ambient_dim(); }

  // All lines, each as a point set, in order of their two smallest points.
  const std::vector<PointSet>& lines() const;
  int line_through(int a, int b) const;
  const std::vector<int>& lines_through(int point) const;

  // Hyperplanes sorted by their flattened reduced-echelon bases; the first
  // is x0 = 0.
  const std::vector<LinearSubspace>& hyperplanes() const;
  const std::vector<Vec>& hyperplane_forms() const;
  PointSet hyperplane_points(int h) const;

  // Point of <v>, or -1 for v = 0.
  int point_of(std::span<const Elem> v) const;

 private:
  ProjectiveSpace(int n, FieldPtr field, std::vector<Vec> points);
  static std::vector<Vec> enumerate_points(int n, const Field& f);
  void build_lines() const;
  void build_hyperplanes() const;

  mutable std::once_flag lines_once_;
  mutable std::vector<PointSet> lines_;
  mutable std::vector<std::vector<int>> lines_through_;
  mutable std::unordered_map<std::uint64_t, int> line_by_pair_;
  mutable std::once_flag hyperplanes_once_;
  mutable std::vector<LinearSubspace> hyperplanes_;
  mutable std::vector<Vec> forms_;
};

SpacePtr build_pg(int n, const FieldPtr& field);

}  // namespace fgeom

#endif  // FGEOM_EMBEDDED_HPP_
