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

#ifndef FGEOM_PROJECTIVE_HPP_
#define FGEOM_PROJECTIVE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "fgeom/embedded.hpp"
#include "fgeom/gf.hpp"
#include "fgeom/linalg.hpp"
#include "fgeom/morphism.hpp"

namespace fgeom {

// P1 (unique line through two points), P2 (lines have two points), P3
// (Veblen-Young), the dimension formula over all flat pairs, and
// irreducibility (every line has at least three points).
AxiomReport check_projective_axioms(const Geometry& g,
                                    const CheckOptions& options = {});

// Classes of "equal, or joined by a line with at least three points".
// Throws kNotProjective if P1-P3 fail.
std::vector<PointSet> decompose_irreducible(const Geometry& g);

// Phi(v) = M v^sigma: sigma applied coordinatewise, then the matrix.
class SemilinearMap {
 public:
  SemilinearMap(FieldHom sigma, Matrix matrix);

  const FieldHom& sigma() const { return sigma_; }
  const Matrix& matrix() const { return matrix_; }
  const FieldPtr& source_field() const { return sigma_.source(); }
  const FieldPtr& target_field() const { return sigma_.target(); }
  // Lengths of source and target coordinate vectors.
  int source_coords() const { return matrix_.cols(); }
  int target_coords() const { return matrix_.rows(); }

  Vec apply(std::span<const Elem> v) const;
  bool is_zero() const { return matrix_.is_zero(); }
  // lambda * Phi, lambda in the target field.
  SemilinearMap scaled(Elem lambda) const;
  // The multiple whose first nonzero entry (row-major) is 1.
  SemilinearMap canonical() const;
  // The lambda with canonical() == scaled(lambda); 1 for the zero map.
  Elem canonical_scalar() const;
  // after o this.
  SemilinearMap then(const SemilinearMap& after) const;
  // ker Phi, a subspace over the source field, by sigma-twisted elimination.
  LinearSubspace kernel() const;

  friend bool operator==(const SemilinearMap& a, const SemilinearMap& b) {
    return a.sigma_ == b.sigma_ && a.matrix_ == b.matrix_;
  }

 private:
  FieldHom sigma_;
  Matrix matrix_;
};

// Index of <Phi(v)> in dst, or nullopt when v lies in the kernel.
std::optional<int> apply_semilinear(const SemilinearMap& phi,
                                    const ProjectiveSpace& dst,
                                    std::span<const Elem> v);
// Image of every point of src; -1 on P(ker Phi).
std::vector<int> induced_point_map(const SemilinearMap& phi,
                                   const ProjectiveSpace& src,
                                   const ProjectiveSpace& dst);

// lambda with b == lambda * a, if any; requires equal sigma.
std::optional<Elem> proportional(const SemilinearMap& a,
                                 const SemilinearMap& b);

struct ProjPartialMap {
  SemilinearMap phi;
  LinearSubspace exceptional;
  PartialMorphism morphism;
};

// Throws kZeroMap for Phi = 0.
ProjPartialMap induced_partial(const SemilinearMap& phi, const SpacePtr& src,
                               const SpacePtr& dst);

// V -> V/W in the coordinates of the canonical complement of W.
SemilinearMap quotient_linear_map(const FieldPtr& field, int ambient,
                                  const LinearSubspace& w);

// PG(V)/P(W) == PG(V/W), with V/W coordinatized by the free columns of W's
// echelon basis.
struct QuotientIso {
  Quotient quotient;
  SpacePtr target;
  LinearSubspace w;
  // Quotient class -> point of target, and its inverse.
  std::vector<int> class_to_point;
  std::vector<int> point_to_class;
  bool verified = false;
};

QuotientIso quotient_iso(const SpacePtr& pg, const LinearSubspace& w);

}  // namespace fgeom

#endif  // FGEOM_PROJECTIVE_HPP_
