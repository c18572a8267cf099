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

#include "fgeom/gallery.hpp"

#include "fgeom/error.hpp"

namespace fgeom {
namespace {

EmbeddedPtr from_points(const SpacePtr& pg, const PointSet& keep) {
  std::vector<Vec> pts;
  keep.for_each([&](int x) { pts.push_back(pg->coords(x)); });
  return std::make_shared<EmbeddedGeometry>(pg->field(), pg->ambient_dim(),
                                            std::move(pts));
}

bool has_root(const Field& f, Elem b, Elem c) {
  for (int t = 0; t < f.order(); ++t) {
    const Elem e = static_cast<Elem>(t);
    if (f.add(f.add(f.mul(e, e), f.mul(b, e)), c) == 0) return true;
  }
  return false;
}

}  // namespace

EmbeddedPtr make_complement(const SpacePtr& pg,
                            const std::vector<LinearSubspace>& flats) {
  PointSet removed(pg->size());
  for (const auto& w : flats) removed |= pg->points_in(w);
  return from_points(pg, pg->all_points() - removed);
}

EmbeddedPtr make_affine(int n, const FieldPtr& field) {
  SpacePtr pg = build_pg(n, field);
  return make_complement(pg, {pg->hyperplanes().front()});
}

EmbeddedPtr make_two_hyperplanes(const SpacePtr& pg, const LinearSubspace& h1,
                                 const LinearSubspace& h2) {
  const int n = pg->ambient_dim();
  if (h1.ambient() != n + 1 || h2.ambient() != n + 1 || h1.dim() != n ||
      h2.dim() != n) {
    throw Error(ErrorCode::kInvalidArgument, "expected two hyperplanes");
  }
  if (h1 == h2) throw Error(ErrorCode::kEqualHyperplanes, "H1 == H2");
  const PointSet a = pg->points_in(h1);
  const PointSet b = pg->points_in(h2);
  return from_points(pg, (a | b) - (a & b));
}

EmbeddedPtr make_two_hyperplanes(const SpacePtr& pg) {
  const auto& hs = pg->hyperplanes();
  return make_two_hyperplanes(pg, hs[0], hs[1]);
}

EmbeddedPtr make_subfield_complement(int n, const FieldPtr& small,
                                     const FieldPtr& large) {
  if (small == large) {
    throw Error(ErrorCode::kNoEmbedding, "subfield must be proper");
  }
  const auto homs = list_homomorphisms(small, large);
  if (homs.empty()) {
    throw Error(ErrorCode::kNoEmbedding,
                small->name() + " does not embed in " + large->name());
  }
  SpacePtr pg = build_pg(n, large);
  std::vector<bool> in_image(large->order(), false);
  for (int a = 0; a < small->order(); ++a) {
    in_image[homs.front()(static_cast<Elem>(a))] = true;
  }
  PointSet keep(pg->size());
  for (int x = 0; x < pg->size(); ++x) {
    for (Elem c : pg->coords(x)) {
      if (!in_image[c]) {
        keep.set(x);
        break;
      }
    }
  }
  return from_points(pg, keep);
}

EmbeddedPtr make_coordinate_hyperplanes(const SpacePtr& pg) {
  PointSet keep(pg->size());
  for (int x = 0; x < pg->size(); ++x) {
    for (Elem c : pg->coords(x)) {
      if (c == 0) {
        keep.set(x);
        break;
      }
    }
  }
  return from_points(pg, keep);
}

std::pair<Elem, Elem> elliptic_form(const Field& f) {
  if (!has_root(f, 0, 1)) return {0, 1};
  for (int b = 0; b < f.order(); ++b) {
    for (int c = 0; c < f.order(); ++c) {
      if (!has_root(f, static_cast<Elem>(b), static_cast<Elem>(c))) {
        return {static_cast<Elem>(b), static_cast<Elem>(c)};
      }
    }
  }
  throw Error(ErrorCode::kNoIrreducibleForm,
              "no irreducible binary quadratic over " + f.name());
}

EmbeddedPtr make_quadric(const FieldPtr& field, QuadricForm form) {
  SpacePtr pg = build_pg(3, field);
  const Field& f = *field;
  const int q = f.order();
  const auto [b, c] =
      form == QuadricForm::kElliptic ? elliptic_form(f) : std::pair<Elem, Elem>{0, 0};
  PointSet keep(pg->size());
  for (int x = 0; x < pg->size(); ++x) {
    const Vec& v = pg->coords(x);
    Elem value = 0;
    switch (form) {
      case QuadricForm::kElliptic:
        value = f.add(f.mul(v[0], v[1]),
                      f.add(f.add(f.mul(v[2], v[2]), f.mul(b, f.mul(v[2], v[3]))),
                            f.mul(c, f.mul(v[3], v[3]))));
        break;
      case QuadricForm::kHyperbolic:
        value = f.sub(f.mul(v[0], v[3]), f.mul(v[1], v[2]));
        break;
      case QuadricForm::kCone:
        value = f.sub(f.mul(v[0], v[1]), f.mul(v[2], v[2]));
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) value = 1;  // vertex
        break;
    }
    if (value == 0) keep.set(x);
  }
  const int expected = form == QuadricForm::kElliptic     ? q * q + 1
                       : form == QuadricForm::kHyperbolic ? (q + 1) * (q + 1)
                                                          : q * (q + 1);
  if (keep.count() != expected) {
    throw Error(ErrorCode::kInternalContradiction,
                "quadric has " + std::to_string(keep.count()) +
                    " points, expected " + std::to_string(expected));
  }
  return from_points(pg, keep);
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {
      "pg",           "affine",           "complement",
      "two-hyperplanes", "subfield-complement", "coordinate-hyperplanes",
      "elliptic-quadric", "hyperbolic-quadric", "cone"};
  return names;
}

EmbeddedPtr make_example(const ExampleSpec& spec) {
  FieldPtr field = Field::get(spec.q);
  const std::string& name = spec.name;
  if (name == "pg") return build_pg(spec.dim, field);
  if (name == "affine") return make_affine(spec.dim, field);
  if (name == "complement") {
    SpacePtr pg = build_pg(spec.dim, field);
    const auto& hs = pg->hyperplanes();
    if (spec.count < 0 || spec.count > static_cast<int>(hs.size())) {
      throw Error(ErrorCode::kInvalidArgument, "bad hyperplane count");
    }
    return make_complement(pg, {hs.begin(), hs.begin() + spec.count});
  }
  if (name == "two-hyperplanes") {
    return make_two_hyperplanes(build_pg(spec.dim, field));
  }
  if (name == "subfield-complement") {
    const int sub = spec.subfield > 0 ? spec.subfield : field->characteristic();
    return make_subfield_complement(spec.dim, Field::get(sub), field);
  }
  if (name == "coordinate-hyperplanes") {
    return make_coordinate_hyperplanes(build_pg(spec.dim, field));
  }
  auto quadric_dim = [&] {
    if (spec.dim != 3) {
      throw Error(ErrorCode::kInvalidArgument, "quadrics live in PG(3,q)");
    }
  };
  if (name == "elliptic-quadric") {
    quadric_dim();
    return make_quadric(field, QuadricForm::kElliptic);
  }
  if (name == "hyperbolic-quadric") {
    quadric_dim();
    return make_quadric(field, QuadricForm::kHyperbolic);
  }
  if (name == "cone") {
    quadric_dim();
    return make_quadric(field, QuadricForm::kCone);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown example '" + name + "'");
}

}  // namespace fgeom
