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

#include "fgeom/embedded.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fgeom/error.hpp"

namespace fgeom {

EmbeddedGeometry::EmbeddedGeometry(FieldPtr field, int ambient_dim,
                                   std::vector<Vec> points)
    : Geometry(static_cast<int>(points.size())),
      field_(std::move(field)),
      ambient_dim_(ambient_dim) {
  if (ambient_dim_ < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative ambient dimension");
  }
  const int q = field_->order();
  std::vector<std::pair<std::uint64_t, Vec>> keyed;
  keyed.reserve(points.size());
  for (auto& v : points) {
    if (static_cast<int>(v.size()) != ambient_dim_ + 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "point has " + std::to_string(v.size()) +
                      " coordinates, expected " +
                      std::to_string(ambient_dim_ + 1));
    }
    for (Elem c : v) {
      if (c >= q) {
        throw Error(ErrorCode::kInvalidArgument,
                    "coordinate " + std::to_string(c) + " outside " +
                        field_->name());
      }
    }
    if (is_zero(v)) {
      throw Error(ErrorCode::kInvalidArgument, "zero vector is not a point");
    }
    Vec n = normalized(*field_, std::move(v));
    keyed.emplace_back(key(n), std::move(n));
  }
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i + 1 < keyed.size(); ++i) {
    if (keyed[i].first == keyed[i + 1].first) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate point");
    }
  }
  coords_.reserve(keyed.size());
  for (auto& [k, v] : keyed) {
    index_.emplace(k, static_cast<int>(coords_.size()));
    coords_.push_back(std::move(v));
  }
}

std::uint64_t EmbeddedGeometry::key(std::span<const Elem> v) const {
  std::uint64_t k = 0;
  for (Elem c : v) k = k * field_->order() + c;
  return k;
}

std::optional<int> EmbeddedGeometry::index_of(std::span<const Elem> v) const {
  if (static_cast<int>(v.size()) != ambient_dim_ + 1 || is_zero(v)) {
    return std::nullopt;
  }
  const Vec n = normalized(*field_, Vec(v.begin(), v.end()));
  auto it = index_.find(key(n));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

LinearSubspace EmbeddedGeometry::span_of(const PointSet& s) const {
  LinearSubspace w(field_, ambient_dim_ + 1);
  s.for_each([&](int x) { w.insert(coords_[x]); });
  return w;
}

PointSet EmbeddedGeometry::points_in(const LinearSubspace& w) const {
  PointSet out(size());
  if (w.dim() == 0) return out;
  if (w.dim() == ambient_dim_ + 1) return all_points();
  for (int i = 0; i < size(); ++i) {
    if (w.contains(coords_[i])) out.set(i);
  }
  return out;
}

PointSet EmbeddedGeometry::closure(const PointSet& a) const {
  if (a.empty()) return a;
  return points_in(span_of(a));
}

int EmbeddedGeometry::rank(const PointSet& s) const {
  return span_of(s).dim();
}

SpacePtr EmbeddedGeometry::ambient() const {
  return ProjectiveSpace::get(ambient_dim_, field_);
}

int EmbeddedGeometry::ambient_index(int point) const {
  std::call_once(ambient_once_, [this] {
    SpacePtr pg = ambient();
    ambient_index_.resize(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      ambient_index_[i] = *pg->index_of(coords_[i]);
    }
  });
  return ambient_index_[point];
}

PointSet EmbeddedGeometry::to_ambient(const PointSet& local) const {
  PointSet out(ambient()->size());
  local.for_each([&](int x) { out.set(ambient_index(x)); });
  return out;
}

PointSet EmbeddedGeometry::from_ambient(const PointSet& ambient_set) const {
  SpacePtr pg = ambient();
  PointSet out(size());
  ambient_set.for_each([&](int a) {
    if (auto i = index_of(pg->coords(a))) out.set(*i);
  });
  return out;
}

EmbeddedPtr EmbeddedGeometry::restrict_to(const PointSet& subset) const {
  std::vector<Vec> pts;
  subset.for_each([&](int x) { pts.push_back(coords_[x]); });
  return std::make_shared<EmbeddedGeometry>(field_, ambient_dim_,
                                            std::move(pts));
}

// ---------------------------------------------------------------------------

std::int64_t ProjectiveSpace::point_count(int n, int q) {
  std::int64_t total = 0;
  std::int64_t power = 1;
  for (int i = 0; i <= n; ++i) {
    total += power;
    power *= q;
  }
  return total;
}

std::vector<Vec> ProjectiveSpace::enumerate_points(int n, const Field& f) {
  const int q = f.order();
  std::vector<Vec> out;
  for (int lead = 0; lead <= n; ++lead) {
    const int free = n - lead;
    std::int64_t combos = 1;
    for (int i = 0; i < free; ++i) combos *= q;
    for (std::int64_t c = 0; c < combos; ++c) {
      Vec v(n + 1, 0);
      v[lead] = 1;
      std::int64_t r = c;
      for (int i = n; i > lead; --i) {
        v[i] = static_cast<Elem>(r % q);
        r /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

ProjectiveSpace::ProjectiveSpace(int n, FieldPtr field, std::vector<Vec> points)
    : EmbeddedGeometry(std::move(field), n, std::move(points)) {}

SpacePtr ProjectiveSpace::get(int n, const FieldPtr& field) {
  if (n < 0 || n > 5) {
    throw Error(ErrorCode::kSizeLimit,
                "PG(" + std::to_string(n) + ",q) outside 0 <= n <= 5");
  }
  if (point_count(n, field->order()) > kMaxPoints) {
    throw Error(ErrorCode::kSizeLimit,
                "PG(" + std::to_string(n) + "," +
                    std::to_string(field->order()) + ") has too many points");
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, SpacePtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, field->order()}];
  if (!slot) {
    slot = SpacePtr(new ProjectiveSpace(n, field, enumerate_points(n, *field)));
  }
  return slot;
}

SpacePtr build_pg(int n, const FieldPtr& field) {
  if (n < 1) {
    throw Error(ErrorCode::kSizeLimit,
                "PG(" + std::to_string(n) + ",q) outside 1 <= n <= 5");
  }
  return ProjectiveSpace::get(n, field);
}

int ProjectiveSpace::point_of(std::span<const Elem> v) const {
  auto i = index_of(v);
  return i ? *i : -1;
}

void ProjectiveSpace::build_lines() const {
  const Field& fd = f();
  const int n = size();
  std::vector<PointSet> partner(n, PointSet(n));
  lines_through_.assign(n, {});
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (partner[a].test(b)) continue;
      PointSet line(n);
      line.set(a);
      for (int l = 0; l < fd.order(); ++l) {
        Vec v = scaled(fd, static_cast<Elem>(l), coords(a));
        v = added(fd, v, coords(b));
        line.set(point_of(v));
      }
      const std::vector<int> pts = line.elements();
      for (int x : pts) partner[x] |= line;
      const int idx = static_cast<int>(lines_.size());
      for (int x : pts) lines_through_[x].push_back(idx);
      line_by_pair_.emplace(static_cast<std::uint64_t>(pts[0]) * n + pts[1],
                            idx);
      lines_.push_back(std::move(line));
    }
  }
}

const std::vector<PointSet>& ProjectiveSpace::lines() const {
  std::call_once(lines_once_, [this] { build_lines(); });
  return lines_;
}

const std::vector<int>& ProjectiveSpace::lines_through(int point) const {
  lines();
  return lines_through_[point];
}

int ProjectiveSpace::line_through(int a, int b) const {
  if (a == b) {
    throw Error(ErrorCode::kInvalidArgument, "a line needs two points");
  }
  lines();
  const Field& fd = f();
  int lo0 = std::min(a, b);
  int lo1 = std::max(a, b);
  for (int l = 1; l < fd.order(); ++l) {
    Vec v = scaled(fd, static_cast<Elem>(l), coords(a));
    const int x = point_of(added(fd, v, coords(b)));
    if (x < lo0) {
      lo1 = lo0;
      lo0 = x;
    } else if (x < lo1) {
      lo1 = x;
    }
  }
  return line_by_pair_.at(static_cast<std::uint64_t>(lo0) * size() + lo1);
}

void ProjectiveSpace::build_hyperplanes() const {
  const int n = ambient_dim();
  std::vector<std::pair<Vec, std::pair<LinearSubspace, Vec>>> keyed;
  for (const Vec& form : all_coords()) {
    Matrix m(1, n + 1);
    for (int j = 0; j <= n; ++j) m(0, j) = form[j];
    LinearSubspace h =
        LinearSubspace::span(field(), n + 1, kernel_basis(f(), m));
    Vec flat;
    for (const Vec& row : h.basis()) flat.insert(flat.end(), row.begin(), row.end());
    keyed.push_back({std::move(flat), {std::move(h), form}});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [flat, hf] : keyed) {
    hyperplanes_.push_back(std::move(hf.first));
    forms_.push_back(std::move(hf.second));
  }
}

const std::vector<LinearSubspace>& ProjectiveSpace::hyperplanes() const {
  std::call_once(hyperplanes_once_, [this] { build_hyperplanes(); });
  return hyperplanes_;
}

const std::vector<Vec>& ProjectiveSpace::hyperplane_forms() const {
  hyperplanes();
  return forms_;
}

PointSet ProjectiveSpace::hyperplane_points(int h) const {
  const Vec& form = hyperplane_forms()[h];
  const Field& fd = f();
  PointSet out(size());
  for (int i = 0; i < size(); ++i) {
    Elem s = 0;
    const Vec& v = coords(i);
    for (std::size_t j = 0; j < v.size(); ++j) s = fd.add(s, fd.mul(form[j], v[j]));
    if (s == 0) out.set(i);
  }
  return out;
}

}  // namespace fgeom
