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

#ifndef FGEOM_IO_HPP_
#define FGEOM_IO_HPP_

#include <string>

#include "json.hpp"

#include "fgeom/classify.hpp"
#include "fgeom/morphism.hpp"
#include "fgeom/reconstruct.hpp"

namespace fgeom {

using Json = nlohmann::ordered_json;

// Parses text; syntax errors throw kParseError naming line and column.
Json parse_json(const std::string& text, const std::string& origin);
Json read_json_file(const std::string& path);

struct LoadedGeometry {
  GeometryPtr geometry;
  EmbeddedPtr embedded;  // null for abstract geometries
};

// { "field": "gf(q)", "ambient_dim": n, "points": [[...], ...] } or
// { "points": N, "flats": [[...], ...] }. Shape errors throw kParseError
// with the JSON pointer of the offending value.
LoadedGeometry geometry_from_json(const Json& j);
Json geometry_to_json(const EmbeddedGeometry& g);
Json geometry_to_json(const TableGeometry& g);

// { "pairs": [[[src], [dst]], ...], "target": {"field", "ambient_dim"} }
// where "target" is optional and defaults to the domain field and the
// length of the first image vector.
MorphismInstance map_from_json(const Json& j, const EmbeddedPtr& domain,
                               MorphismKind kind);
Json map_to_json(const MorphismInstance& phi);

// { "sigma": {"power": i}, "matrix": [[...]], "source": "gf(q)",
//   "target": "gf(q')" }
Json semilinear_to_json(const SemilinearMap& phi);
SemilinearMap semilinear_from_json(const Json& j);

Json to_json(const Witness& w);
Json to_json(const AxiomVerdict& v, bool witnesses);
Json to_json(const AxiomReport& r, bool witnesses);
Json to_json(const PredicateResult& r, bool witnesses);
Json to_json(const ClassificationReport& r, bool witnesses);
Json to_json(const MorphismVerdict& v, bool witnesses);
Json to_json(const ReconstructionResult& r);
Json to_json(const SideConditionReport& r);

}  // namespace fgeom

#endif  // FGEOM_IO_HPP_
