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

#ifndef FGEOM_GALLERY_HPP_
#define FGEOM_GALLERY_HPP_

#include <string>
#include <vector>

#include "fgeom/embedded.hpp"

namespace fgeom {

// P minus the union of the given subspaces.
EmbeddedPtr make_complement(const SpacePtr& pg,
                            const std::vector<LinearSubspace>& flats);
// PG(n,q) minus the hyperplane x0 = 0.
EmbeddedPtr make_affine(int n, const FieldPtr& field);
// (H1 u H2) - (H1 n H2). Throws kEqualHyperplanes, or kInvalidArgument if
// either subspace is not a hyperplane.
EmbeddedPtr make_two_hyperplanes(const SpacePtr& pg, const LinearSubspace& h1,
                                 const LinearSubspace& h2);
// With the first two hyperplanes in canonical order.
EmbeddedPtr make_two_hyperplanes(const SpacePtr& pg);
// PG(n,L) minus the canonical image of PG(n,K). Throws kNoEmbedding unless
// K embeds in L with K != L.
EmbeddedPtr make_subfield_complement(int n, const FieldPtr& small,
                                     const FieldPtr& large);
// Union of the n+1 coordinate hyperplanes x_i = 0.
EmbeddedPtr make_coordinate_hyperplanes(const SpacePtr& pg);

enum class QuadricForm { kElliptic, kHyperbolic, kCone };

// Quadrics of PG(3,q):
//   elliptic    x0 x1 + f(x2, x3), f = x2^2 + x3^2 when irreducible, else
//               the first irreducible x2^2 + b x2 x3 + c x3^2 scanning b, c
//   hyperbolic  x0 x3 - x1 x2
//   cone        x0 x1 - x2^2, vertex (0,0,0,1) removed
EmbeddedPtr make_quadric(const FieldPtr& field, QuadricForm form);
// Coefficients (b, c) of the binary form used for the elliptic quadric.
std::pair<Elem, Elem> elliptic_form(const Field& field);

struct ExampleSpec {
  std::string name;
  int q = 2;
  int dim = 3;
  // Number of hyperplanes removed by "complement".
  int count = 1;
  // Subfield order for "subfield-complement".
  int subfield = 0;
};

// Names: pg, affine, complement, two-hyperplanes, subfield-complement,
// coordinate-hyperplanes, elliptic-quadric, hyperbolic-quadric, cone.
EmbeddedPtr make_example(const ExampleSpec& spec);
const std::vector<std::string>& example_names();

}  // namespace fgeom

#endif  // FGEOM_GALLERY_HPP_
