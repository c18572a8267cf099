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

#ifndef FGEOM_MORPHISM_HPP_
#define FGEOM_MORPHISM_HPP_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "fgeom/geometry.hpp"

namespace fgeom {

// A total point map between finite geometries.
struct GeometryMorphism {
  GeometryPtr source;
  GeometryPtr target;
  std::vector<int> map;
};

// A point map defined exactly off the exceptional flat; map[x] == -1 on it.
struct PartialMorphism {
  GeometryPtr source;
  GeometryPtr target;
  PointSet exceptional;
  std::vector<int> map;
};

struct MorphismVerdict {
  bool is_morphism = true;
  // Preimage of every target flat is a flat.
  bool condition_a = true;
  // closure(phi(A)) contains phi(closure(A)) for |A| <= 4.
  bool condition_c = true;
  // The subset check covers every finite A when the source has rank <= 4.
  bool condition_c_complete = false;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t subsets_checked = 0;
  // Set when the two conditions disagree where they must coincide.
  bool internal_disagreement = false;
  std::vector<Witness> witnesses;
};

MorphismVerdict check_morphism(const Geometry& source, const Geometry& target,
                               std::span<const int> map,
                               const CheckOptions& options = {});
MorphismVerdict check_morphism(const GeometryMorphism& phi,
                               const CheckOptions& options = {});

// Exceptional set a flat, map defined exactly off it, constant on E-classes,
// and a morphism on the subgeometry source - E.
MorphismVerdict check_partial_morphism(const PartialMorphism& phi,
                                       const CheckOptions& options = {});

struct Quotient {
  std::shared_ptr<const QuotientGeometry> geometry;
  PartialMorphism projection;
};

Quotient quotient(const GeometryPtr& g, const PointSet& e);

// The unique morphism on X/E through which phi factors. Throws
// kPreconditionLinesTooShort or kNotConstantOnClasses.
GeometryMorphism factor_through_quotient(const PartialMorphism& phi);

struct DimBoundsReport {
  int source_dim = -1;
  int target_dim = -1;
  bool surjective = false;
  bool bijective = false;
  bool dims_ok = false;
  // Meaningful when bijective: the inverse map is a morphism too.
  bool is_isomorphism = false;
  std::string note;
};

DimBoundsReport check_dim_bounds(const GeometryMorphism& phi);

}  // namespace fgeom

#endif  // FGEOM_MORPHISM_HPP_
