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

#ifndef FGEOM_GEOMETRY_HPP_
#define FGEOM_GEOMETRY_HPP_

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "fgeom/point_set.hpp"
#include "fgeom/report.hpp"

namespace fgeom {

// A finite closure space on the points {0, ..., size()-1}. Subclasses supply
// the closure oracle; everything else (bases, dimension, lattice operations,
// the flat enumeration) is derived from it.
//
// Instances are immutable once constructed. The flat cache is filled once,
// under std::call_once, and is read-only afterwards.
class Geometry : public std::enable_shared_from_this<Geometry> {
 public:
  virtual ~Geometry() = default;

  int size() const { return size_; }
  PointSet no_points() const { return PointSet(size_); }
  PointSet all_points() const { return PointSet::full(size_); }

  virtual PointSet closure(const PointSet& a) const = 0;
  PointSet closure_of(std::initializer_list<int> points) const;

  // Cardinality of a greedy basis of closure(s). Subclasses with a faster
  // route (linear rank) override it.
  virtual int rank(const PointSet& s) const;
  int dim(const PointSet& s) const { return rank(s) - 1; }
  bool is_flat(const PointSet& s) const { return closure(s) == s; }

  PointSet join(const PointSet& a, const PointSet& b) const;
  PointSet meet(const PointSet& a, const PointSet& b) const { return a & b; }

  // Every closed set, sorted by rank and then canonically.
  const std::vector<PointSet>& flats() const;
  std::vector<PointSet> flats_of_dim(int d) const;
  int dimension() const { return dim(all_points()); }

 protected:
  explicit Geometry(int size) : size_(size) {}
  // Hook for geometries whose closed sets are given explicitly.
  virtual std::vector<PointSet> enumerate_flats() const;

 private:
  int size_;
  mutable std::once_flag flats_once_;
  mutable std::vector<PointSet> flats_;
  mutable std::vector<int> flat_ranks_;
};

using GeometryPtr = std::shared_ptr<const Geometry>;

// Greedy left-to-right selection in the given order; throws kNotGenerating
// unless closure(generators) == s.
std::vector<int> basis_of(const Geometry& g, const PointSet& s,
                          std::span<const int> generators);
bool is_independent(const Geometry& g, std::span<const int> points);

// An abstract geometry given by its table of closed sets. The closure of A
// is the intersection of all listed sets containing A (and of the whole
// point set).
class TableGeometry : public Geometry {
 public:
  TableGeometry(int size, std::vector<PointSet> closed_sets);

  PointSet closure(const PointSet& a) const override;
  const std::vector<PointSet>& table() const { return table_; }

 protected:
  std::vector<PointSet> enumerate_flats() const override;

 private:
  std::vector<PointSet> table_;
};

// The subgeometry on a subset of a parent's points; closure is
// parent-closure intersected with the subset. Points are renumbered in
// increasing parent order.
class SubGeometry : public Geometry {
 public:
  SubGeometry(GeometryPtr parent, const PointSet& subset);

  PointSet closure(const PointSet& a) const override;
  const Geometry& parent() const { return *parent_; }
  int parent_index(int point) const { return to_parent_[point]; }
  // -1 when the parent point is not in the subgeometry.
  int local_index(int parent_point) const { return to_local_[parent_point]; }
  PointSet to_parent(const PointSet& local) const;
  PointSet to_local(const PointSet& parent_set) const;

 private:
  GeometryPtr parent_;
  std::vector<int> to_parent_;
  std::vector<int> to_local_;
};

// X/E: points are the classes of X - E under x1 v E == x2 v E. Flats are
// S/E for the flats S of X containing E.
class QuotientGeometry : public Geometry {
 public:
  QuotientGeometry(GeometryPtr parent, const PointSet& exceptional);

  PointSet closure(const PointSet& classes) const override;
  int rank(const PointSet& classes) const override;

  const Geometry& parent() const { return *parent_; }
  const GeometryPtr& parent_ptr() const { return parent_; }
  const PointSet& exceptional() const { return exceptional_; }
  // -1 for points of E.
  int class_of(int parent_point) const { return class_of_[parent_point]; }
  const PointSet& members(int cls) const { return members_[cls]; }
  int representative(int cls) const { return members_[cls].first(); }
  // E together with every member of the given classes.
  PointSet lift(const PointSet& classes) const;
  // Classes meeting the given parent set.
  PointSet project(const PointSet& parent_set) const;

 private:
  GeometryPtr parent_;
  PointSet exceptional_;
  int exceptional_rank_;
  std::vector<int> class_of_;
  std::vector<PointSet> members_;
};

// Same points as the parent; the proper flats are the parent's flats of
// dimension < level, so the truncation has dimension `level`.
class TruncatedGeometry : public Geometry {
 public:
  TruncatedGeometry(GeometryPtr parent, int level);

  PointSet closure(const PointSet& a) const override;

 private:
  GeometryPtr parent_;
  int level_;
};

// Subgeometry on A. Embedded parents yield embedded subgeometries.
GeometryPtr subgeometry(const GeometryPtr& g, const PointSet& subset);

// G1-G4 plus the closure-operator laws, with witnesses on failure.
AxiomReport check_geometry_axioms(const Geometry& g);

// Rule-closed sets for "generated by lines" (arity 2) or "by lines and
// planes" (arity 3): S is rule-closed when it contains the closure of every
// `arity` of its points.
struct GenerationResult {
  bool holds = true;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t examined = 0;
  // A rule-closed set that is not a flat.
  std::vector<int> witness;
};
GenerationResult check_generated_by(const Geometry& g, int arity,
                                    const CheckOptions& options = {});
bool is_generated_by_lines(const Geometry& g);
bool is_generated_by_lines_planes(const Geometry& g);

}  // namespace fgeom

#endif  // FGEOM_GEOMETRY_HPP_
