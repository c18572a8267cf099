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

#include "fgeom/io.hpp"

#include <fstream>
#include <sstream>

#include "fgeom/error.hpp"

namespace fgeom {
namespace {

[[noreturn]] void shape_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, "at " + (where.empty() ? "/" : where) + ": " + what);
}

const Json& member(const Json& j, const std::string& where, const char* key) {
  if (!j.is_object()) shape_error(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) shape_error(where, std::string("missing \"") + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) shape_error(where, "expected an integer");
  return j.get<int>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) shape_error(where, "expected an array");
  return j;
}

FieldPtr as_field(const Json& j, const std::string& where) {
  if (!j.is_string()) shape_error(where, "expected a field designator");
  return Field::parse(j.get<std::string>());
}

Vec as_vec(const Json& j, const std::string& where, const Field& f) {
  Vec v;
  std::size_t i = 0;
  for (const Json& e : as_array(j, where)) {
    const std::string at = where + "/" + std::to_string(i++);
    const int c = as_int(e, at);
    if (c < 0 || c >= f.order()) shape_error(at, "coefficient outside " + f.name());
    v.push_back(static_cast<Elem>(c));
  }
  return v;
}

Json vec_json(std::span<const Elem> v) {
  Json a = Json::array();
  for (Elem e : v) a.push_back(static_cast<int>(e));
  return a;
}

Json ints_json(const std::vector<int>& v) {
  Json a = Json::array();
  for (int e : v) a.push_back(e);
  return a;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Locate the byte offset as line and column.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParseError, origin + ":" + std::to_string(line) + ":" +
                                            std::to_string(column) + ": malformed JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return parse_json(s.str(), path);
}

LoadedGeometry geometry_from_json(const Json& j) {
  const Json& points = member(j, "", "points");
  if (points.is_number_integer()) {
    const int n = as_int(points, "/points");
    if (n <= 0 || n > ProjectiveSpace::kMaxPoints) shape_error("/points", "point count out of range");
    std::vector<PointSet> flats;
    const Json& fl = as_array(member(j, "", "flats"), "/flats");
    for (std::size_t i = 0; i < fl.size(); ++i) {
      const std::string at = "/flats/" + std::to_string(i);
      PointSet s(n);
      std::size_t k = 0;
      for (const Json& p : as_array(fl[i], at)) {
        const std::string pat = at + "/" + std::to_string(k++);
        const int x = as_int(p, pat);
        if (x < 0 || x >= n) shape_error(pat, "point index out of range");
        s.set(x);
      }
      flats.push_back(std::move(s));
    }
    auto g = std::make_shared<TableGeometry>(n, std::move(flats));
    return {g, nullptr};
  }
  const FieldPtr field = as_field(member(j, "", "field"), "/field");
  const int n = as_int(member(j, "", "ambient_dim"), "/ambient_dim");
  if (n < 1 || n > 5) shape_error("/ambient_dim", "ambient dimension must be in [1, 5]");
  std::vector<Vec> coords;
  for (std::size_t i = 0; i < as_array(points, "/points").size(); ++i) {
    const std::string at = "/points/" + std::to_string(i);
    Vec v = as_vec(points[i], at, *field);
    if (static_cast<int>(v.size()) != n + 1) {
      shape_error(at, "expected " + std::to_string(n + 1) + " coordinates");
    }
    coords.push_back(std::move(v));
  }
  if (coords.empty()) shape_error("/points", "no points");
  auto g = std::make_shared<EmbeddedGeometry>(field, n, std::move(coords));
  return {g, g};
}

Json geometry_to_json(const EmbeddedGeometry& g) {
  Json pts = Json::array();
  for (const Vec& v : g.all_coords()) pts.push_back(vec_json(v));
  return Json{{"field", g.f().name()}, {"ambient_dim", g.ambient_dim()}, {"points", pts}};
}

Json geometry_to_json(const TableGeometry& g) {
  Json flats = Json::array();
  for (const PointSet& s : g.table()) flats.push_back(ints_json(s.elements()));
  return Json{{"points", g.size()}, {"flats", flats}};
}

MorphismInstance map_from_json(const Json& j, const EmbeddedPtr& domain,
                               MorphismKind kind) {
  const Json& pairs = as_array(member(j, "", "pairs"), "/pairs");
  FieldPtr tf = domain->field();
  int m = -1;
  if (auto it = j.find("target"); it != j.end()) {
    tf = as_field(member(*it, "/target", "field"), "/target/field");
    m = as_int(member(*it, "/target", "ambient_dim"), "/target/ambient_dim");
  } else if (!pairs.empty()) {
    const Json& first = pairs[0];
    if (first.is_array() && first.size() == 2 && first[1].is_array()) {
      m = static_cast<int>(first[1].size()) - 1;
    }
  }
  if (m < 1 || m > 5) shape_error("/target", "target dimension must be in [1, 5]");
  const SpacePtr target = ProjectiveSpace::get(m, tf);
  MorphismInstance out{domain, target, std::vector<int>(domain->size(), -1), kind};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string at = "/pairs/" + std::to_string(i);
    const Json& pr = as_array(pairs[i], at);
    if (pr.size() != 2) shape_error(at, "expected [source, image]");
    const Vec s = as_vec(pr[0], at + "/0", domain->f());
    const Vec t = as_vec(pr[1], at + "/1", *tf);
    if (static_cast<int>(s.size()) != domain->ambient_dim() + 1) shape_error(at + "/0", "wrong length");
    if (static_cast<int>(t.size()) != m + 1) shape_error(at + "/1", "wrong length");
    const auto x = domain->index_of(s);
    if (!x) shape_error(at + "/0", "not a point of the geometry");
    const int y = target->point_of(t);
    if (y < 0) shape_error(at + "/1", "zero vector");
    if (out.map[*x] >= 0 && out.map[*x] != y) shape_error(at, "conflicting image");
    out.map[*x] = y;
  }
  for (int x = 0; x < domain->size(); ++x) {
    if (out.map[x] < 0) shape_error("/pairs", "point " + std::to_string(x) + " has no image");
  }
  return out;
}

Json map_to_json(const MorphismInstance& phi) {
  Json pairs = Json::array();
  for (int x = 0; x < phi.domain->size(); ++x) {
    pairs.push_back(Json::array({vec_json(phi.domain->coords(x)),
                                 vec_json(phi.target->coords(phi.map[x]))}));
  }
  return Json{{"pairs", pairs},
              {"target",
               {{"field", phi.target->f().name()}, {"ambient_dim", phi.target->ambient_dim()}}}};
}

Json semilinear_to_json(const SemilinearMap& phi) {
  Json rows = Json::array();
  for (int r = 0; r < phi.matrix().rows(); ++r) rows.push_back(vec_json(phi.matrix().row(r)));
  return Json{{"sigma", {{"power", phi.sigma().frobenius_power()}}},
              {"matrix", rows},
              {"source", phi.source_field()->name()},
              {"target", phi.target_field()->name()}};
}

SemilinearMap semilinear_from_json(const Json& j) {
  const FieldPtr s = as_field(member(j, "", "source"), "/source");
  const FieldPtr t = as_field(member(j, "", "target"), "/target");
  const int power = as_int(member(member(j, "", "sigma"), "/sigma", "power"), "/sigma/power");
  const Json& rows = as_array(member(j, "", "matrix"), "/matrix");
  std::vector<Vec> m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.push_back(as_vec(rows[i], "/matrix/" + std::to_string(i), *t));
    if (m.back().size() != m.front().size()) shape_error("/matrix/" + std::to_string(i), "ragged row");
  }
  if (m.empty() || m.front().empty()) shape_error("/matrix", "empty matrix");
  return {FieldHom::from_power(s, t, power),
          Matrix::from_rows(m, static_cast<int>(m.front().size()))};
}

Json to_json(const Witness& w) {
  Json j{{"kind", w.kind}};
  if (!w.points.empty()) j["points"] = ints_json(w.points);
  if (!w.vectors.empty()) {
    Json vs = Json::array();
    for (const Vec& v : w.vectors) vs.push_back(vec_json(v));
    j["vectors"] = vs;
  }
  if (w.ambient) j["ambient"] = true;
  return j;
}

namespace {

Json witnesses_json(const std::vector<Witness>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(to_json(w));
  return a;
}

}  // namespace

Json to_json(const AxiomVerdict& v, bool witnesses) {
  Json j{{"name", v.name}, {"holds", v.holds}, {"checked", v.checked}};
  if (v.sampled) {
    j["sampled"] = true;
    j["seed"] = v.seed;
  }
  if (!v.note.empty()) j["note"] = v.note;
  if (witnesses && !v.witnesses.empty()) j["witnesses"] = witnesses_json(v.witnesses);
  return j;
}

Json to_json(const AxiomReport& r, bool witnesses) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v, witnesses));
  return Json{{"all_hold", r.all_hold()}, {"verdicts", verdicts}};
}

Json to_json(const PredicateResult& r, bool witnesses) {
  Json j{{"name", r.name}};
  j["verdict"] = r.verdict ? Json(*r.verdict) : Json("not applicable");
  if (!r.counts.empty()) j["counts"] = Json(r.counts);
  if (r.sampled) {
    j["sampled"] = true;
    j["seed"] = r.seed;
  }
  if (!r.note.empty()) j["note"] = r.note;
  if (witnesses) {
    if (!r.witnesses.empty()) j["witnesses"] = witnesses_json(r.witnesses);
    if (!r.certificates.empty()) j["certificates"] = witnesses_json(r.certificates);
  }
  return j;
}

Json to_json(const ClassificationReport& r, bool witnesses) {
  Json preds = Json::array();
  Json verdicts = Json::object();
  for (const auto& p : r.predicates) {
    preds.push_back(to_json(p, witnesses));
    verdicts[p.name] = p.verdict ? Json(*p.verdict) : Json("not applicable");
  }
  Json coherence = Json::object();
  for (const auto& [name, ok] : r.coherence) coherence[name] = ok;
  Json j;
  if (!r.geometry_id.empty()) j["geometry"] = r.geometry_id;
  j["verdicts"] = verdicts;
  j["coherence"] = coherence;
  j["predicates"] = preds;
  return j;
}

Json to_json(const MorphismVerdict& v, bool witnesses) {
  Json j{{"is_morphism", v.is_morphism},
         {"condition_a", v.condition_a},
         {"condition_c", v.condition_c},
         {"condition_c_complete", v.condition_c_complete},
         {"subsets_checked", v.subsets_checked},
         {"internal_disagreement", v.internal_disagreement}};
  if (v.sampled) {
    j["sampled"] = true;
    j["seed"] = v.seed;
  }
  if (witnesses && !v.witnesses.empty()) j["witnesses"] = witnesses_json(v.witnesses);
  return j;
}

Json to_json(const ReconstructionResult& r) {
  Json j = semilinear_to_json(r.phi);
  Json kernel = Json::array();
  for (const Vec& v : r.exceptional.basis()) kernel.push_back(vec_json(v));
  j["kernel"] = kernel;
  j["base_points"] = ints_json(r.base_points);
  j["verified_points"] = r.certificate.verified_points;
  j["sigma_power"] = r.certificate.sigma_power;
  j["scalar_normalization"] = static_cast<int>(r.certificate.scalar_normalization);
  j["transcript"] = r.certificate.transcript;
  return j;
}

Json to_json(const SideConditionReport& r) {
  Json j{{"holds", r.holds},
         {"injective", r.injective},
         {"embedding", r.embedding},
         {"kernel_promised", r.kernel_promised},
         {"kernel_zero", r.kernel_zero},
         {"extension_embedding_checked", r.extension_embedding_checked},
         {"extension_is_embedding", r.extension_is_embedding}};
  if (r.tangent_point) j["tangent_point"] = *r.tangent_point;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace fgeom
