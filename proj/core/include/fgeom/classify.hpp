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

#ifndef FGEOM_CLASSIFY_HPP_
#define FGEOM_CLASSIFY_HPP_

#include <optional>
#include <string>
#include <vector>

#include "fgeom/embedded.hpp"
#include "fgeom/report.hpp"

namespace fgeom {

// Every plane has four points, no three collinear. Cross-checked against
// "every line of X/x has at least three points"; counts["routes_agree"]
// records whether the two agree (they can differ outside locally projective
// geometries). Throws kDimensionTooLow for dim X < 2.
PredicateResult has_enough_points(const Geometry& x, bool cross_check = true);

// X/x projective (P1-P3) at every point, and independently the local
// dimension formula on flat pairs through each point.
PredicateResult is_locally_projective(const Geometry& x);

// Every ambient line meets X in no point or in at least two.
PredicateResult check_line_condition(const EmbeddedGeometry& x);

// LP1-LP4 on the lines and planes of X; LP4' and LP5 as well when
// dim X == 3.
AxiomReport check_lp_axioms(const Geometry& x,
                            const CheckOptions& options = {});

struct BundleOptions {
  // Exhaustive when (number of lines)^4 <= limit.
  std::uint64_t limit = 100'000'000;
  std::uint64_t seed = 0xB1D;
  std::uint64_t samples = 200'000;
};

PredicateResult check_bundle_theorem(const Geometry& x,
                                     const BundleOptions& options = {});

struct AffinoResult {
  // Index into ambient()->hyperplanes() of the first H with X u H = P.
  std::optional<int> hyperplane;
  int certificates = 0;
};

AffinoResult find_affino_hyperplane(const EmbeddedGeometry& x);
PredicateResult is_affino_projective(const EmbeddedGeometry& x);
PredicateResult is_locally_affino_projective(const EmbeddedGeometry& x);
PredicateResult is_mobius(const EmbeddedGeometry& x);
PredicateResult is_ovoid(const EmbeddedGeometry& x);
// X/x == P/x at every point.
PredicateResult check_minimal_embedding(const EmbeddedGeometry& x);

struct ClassificationReport {
  std::string geometry_id;
  std::vector<PredicateResult> predicates;
  // Cross-predicate implications that must hold; false marks a defect.
  std::vector<std::pair<std::string, bool>> coherence;

  const PredicateResult* find(std::string_view name) const;
};

struct ClassifyOptions {
  // Empty selects every predicate.
  std::vector<std::string> predicates;
  BundleOptions bundle;
};

const std::vector<std::string>& predicate_names();
ClassificationReport classify(const EmbeddedGeometry& x,
                              const ClassifyOptions& options = {});

}  // namespace fgeom

#endif  // FGEOM_CLASSIFY_HPP_
