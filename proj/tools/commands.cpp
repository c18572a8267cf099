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
#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>

#include "fgeom/error.hpp"
#include "fgeom/gallery.hpp"
#include "fgeom/io.hpp"
#include "run_report.hpp"

namespace fgeom::cli {
namespace {

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
    case ErrorCode::kInvalidArgument:
      return kExitUsage;
    case ErrorCode::kCapExceeded:
    case ErrorCode::kExhaustionLimit:
      return kExitCap;
    default:
      return kExitConstructor;
  }
}

// Reconstruction failures that falsify the input's hypotheses.
bool is_negative_outcome(ErrorCode code) {
  switch (code) {
    case ErrorCode::kImageInLine:
    case ErrorCode::kImageInPlane:
    case ErrorCode::kExceptionalNotFlat:
    case ErrorCode::kSigmaNotHomomorphism:
    case ErrorCode::kVerificationFailed:
    case ErrorCode::kNoBasePair:
    case ErrorCode::kNotEnoughPoints:
    case ErrorCode::kFieldClauseViolated:
    case ErrorCode::kInconsistentExtension:
    case ErrorCode::kNotProportional:
    case ErrorCode::kReductionsDisagree:
    case ErrorCode::kLiftInconsistent:
      return true;
    default:
      return false;
  }
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << j.dump(2) << '\n';
}

void emit(const RunReport& report, const std::string& path) {
  const Json j = report.to_json();
  if (path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_file(path, j);
  }
}

// Runs body with uniform error handling; body returns the exit code.
int guarded(RunReport& report, const std::string& out,
            const std::function<int()>& body,
            const std::function<int(const Error&)>& on_error = nullptr) {
  int code;
  try {
    code = body();
  } catch (const Error& e) {
    report.set_error(std::string(to_string(e.code())), e.what());
    std::cerr << "fgeom: " << e.what() << '\n';
    code = on_error ? on_error(e) : exit_code_for(e.code());
  }
  try {
    emit(report, out);
  } catch (const Error& e) {
    std::cerr << "fgeom: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}

CheckOptions check_options(const Globals& g) {
  CheckOptions o;
  if (g.limit) o.limit = *g.limit;
  if (g.seed) o.seed = *g.seed;
  return o;
}

LoadedGeometry load_geometry(RunReport& report, const std::string& path) {
  report.add_input(path);
  return geometry_from_json(read_json_file(path));
}

EmbeddedPtr require_embedded(const LoadedGeometry& g) {
  if (!g.embedded) {
    throw Error(ErrorCode::kInvalidArgument, "an embedded geometry file is required");
  }
  return g.embedded;
}

void record_sampling(RunReport& report, bool sampled, std::uint64_t seed) {
  if (sampled) report.set_seed(seed);
}

}  // namespace

int cmd_make_example(const Globals& g, const MakeExampleArgs& a) {
  RunReport report(g.argv);
  const auto& names = example_names();
  if (std::find(names.begin(), names.end(), a.name) == names.end()) {
    std::cerr << "fgeom: unknown example '" << a.name << "'\n";
    return kExitUsage;
  }
  int code = kExitOk;
  Json geometry;
  try {
    ExampleSpec spec;
    spec.name = a.name;
    spec.q = Field::parse(a.field)->order();
    spec.dim = a.dim;
    spec.count = a.count;
    if (!a.subfield.empty()) spec.subfield = Field::parse(a.subfield)->order();
    const EmbeddedPtr x = make_example(spec);
    geometry = geometry_to_json(*x);
    report.result() = Json{{"name", a.name}, {"field", x->f().name()},
                           {"ambient_dim", x->ambient_dim()}, {"points", x->size()}};
  } catch (const Error& e) {
    report.set_error(std::string(to_string(e.code())), e.what());
    std::cerr << "fgeom: " << e.what() << '\n';
    code = e.code() == ErrorCode::kParseError ? kExitUsage : kExitConstructor;
  }
  try {
    if (code == kExitOk && !g.out.empty()) {
      write_file(g.out, geometry);
      emit(report, "");
    } else if (code == kExitOk) {
      std::cout << geometry.dump(2) << '\n';
    } else {
      emit(report, "");
    }
  } catch (const Error& e) {
    std::cerr << "fgeom: " << e.what() << '\n';
    return kExitUsage;
  }
  return code;
}

int cmd_check(const Globals& g, const CheckArgs& a) {
  RunReport report(g.argv);
  return guarded(report, g.out, [&] {
    const LoadedGeometry geo = load_geometry(report, a.geometry);
    const CheckOptions opts = check_options(g);
    bool holds = false;
    if (a.axioms == "morphism") {
      if (a.map.empty()) throw Error(ErrorCode::kInvalidArgument, "--map is required");
      const EmbeddedPtr x = require_embedded(geo);
      report.add_input(a.map);
      const MorphismInstance phi =
          map_from_json(read_json_file(a.map), x, MorphismKind::kLocallyProjective);
      const MorphismVerdict v = check_morphism(*x, *phi.target, phi.map, opts);
      holds = v.is_morphism;
      record_sampling(report, v.sampled, v.seed);
      report.result() = Json{{"axioms", "morphism"}, {"report", to_json(v, g.witnesses || !holds)}};
    } else {
      AxiomReport r;
      if (a.axioms == "g") {
        r = check_geometry_axioms(*geo.geometry);
      } else if (a.axioms == "p") {
        r = check_projective_axioms(*geo.geometry, opts);
      } else if (a.axioms == "lp") {
        r = check_lp_axioms(*geo.geometry, opts);
      } else {
        throw Error(ErrorCode::kInvalidArgument, "unknown axiom set '" + a.axioms + "'");
      }
      holds = r.all_hold();
      for (const auto& v : r.verdicts) record_sampling(report, v.sampled, v.seed);
      report.result() = Json{{"axioms", a.axioms}, {"report", to_json(r, g.witnesses || !holds)}};
    }
    report.set_status(holds ? "holds" : "fails");
    return holds ? kExitOk : kExitNegative;
  });
}

int cmd_classify(const Globals& g, const ClassifyArgs& a) {
  RunReport report(g.argv);
  return guarded(report, g.out, [&] {
    const EmbeddedPtr x = require_embedded(load_geometry(report, a.geometry));
    if (!a.ambient.empty()) {
      static const std::regex pattern(R"(pg\((\d+),\s*(\d+)\))", std::regex::icase);
      std::smatch m;
      if (!std::regex_match(a.ambient, m, pattern)) {
        throw Error(ErrorCode::kInvalidArgument, "--ambient expects pg(n,q)");
      }
      if (std::stoi(m[1]) != x->ambient_dim() || std::stoi(m[2]) != x->f().order()) {
        throw Error(ErrorCode::kInvalidArgument, "geometry does not live in " + a.ambient);
      }
    }
    ClassifyOptions opts;
    opts.predicates = a.predicates;
    if (g.limit) opts.bundle.limit = *g.limit;
    if (g.seed) opts.bundle.seed = *g.seed;
    ClassificationReport r = classify(*x, opts);
    r.geometry_id = a.geometry;
    for (const auto& p : r.predicates) record_sampling(report, p.sampled, p.seed);
    report.result() = to_json(r, g.witnesses);
    bool negative = false;
    for (const auto& [name, ok] : r.coherence) negative = negative || !ok;
    if (!a.predicates.empty()) {
      for (const auto& p : r.predicates) negative = negative || (p.verdict && !*p.verdict);
    }
    report.set_status(negative ? "negative" : "ok");
    return negative ? kExitNegative : kExitOk;
  });
}

int cmd_quotient(const Globals& g, const QuotientArgs& a) {
  RunReport report(g.argv);
  return guarded(report, "", [&] {
    const LoadedGeometry geo = load_geometry(report, a.geometry);
    const Geometry& x = *geo.geometry;
    PointSet seed_points(x.size());
    for (int p : a.points) {
      if (p < 0 || p >= x.size()) throw Error(ErrorCode::kInvalidArgument, "point out of range");
      seed_points.set(p);
    }
    const PointSet e = x.closure(seed_points);
    if (e.count() == x.size()) {
      throw Error(ErrorCode::kInvalidArgument, "the flat spans the whole geometry");
    }
    const auto q = std::make_shared<QuotientGeometry>(geo.geometry, e);
    Json classes = Json::array();
    for (int c = 0; c < q->size(); ++c) classes.push_back(q->members(c).elements());
    const AxiomReport pr = check_projective_axioms(*q, check_options(g));
    report.result() = Json{{"flat", e.elements()},
                           {"classes", q->size()},
                           {"members", classes},
                           {"dimension", q->dimension()},
                           {"projective", to_json(pr, g.witnesses)}};
    if (!g.out.empty()) {
      const TableGeometry table(q->size(), q->flats());
      write_file(g.out, geometry_to_json(table));
    }
    return kExitOk;
  });
}

int cmd_reconstruct(const Globals& g, const ReconstructArgs& a) {
  RunReport report(g.argv);
  return guarded(
      report, "",
      [&] {
        const MorphismKind kind = parse_kind(a.kind);
        const EmbeddedPtr x = require_embedded(load_geometry(report, a.geometry));
        report.add_input(a.map);
        const MorphismInstance phi = map_from_json(read_json_file(a.map), x, kind);
        const ReconstructionResult r = reconstruct(phi, {a.base_pair_rank});
        const Json result = to_json(r);
        if (!g.out.empty()) write_file(g.out, result);
        const SideConditionReport side = certify_side_conditions(r, phi, check_options(g));
        report.result() = Json{{"kind", a.kind}, {"map", result}, {"side_conditions", to_json(side)}};
        report.set_status(side.holds ? "reconstructed" : "side_conditions_fail");
        return side.holds ? kExitOk : kExitNegative;
      },
      [](const Error& e) {
        return is_negative_outcome(e.code()) ? kExitNegative : exit_code_for(e.code());
      });
}

int cmd_oracle(const Globals& g, const OracleArgs& a) {
  RunReport report(g.argv);
  return guarded(report, g.out, [&] {
    const EmbeddedPtr x = require_embedded(load_geometry(report, a.geometry));
    report.add_input(a.map);
    const MorphismKind kind = a.kind.empty() ? MorphismKind::kLocallyProjective : parse_kind(a.kind);
    const MorphismInstance phi = map_from_json(read_json_file(a.map), x, kind);
    const auto found = brute_force_oracle(phi, {a.cap});
    Json maps = Json::array();
    for (const auto& m : found) maps.push_back(semilinear_to_json(m));
    report.result() = Json{{"count", found.size()}, {"maps", maps}};
    bool ok = !found.empty();
    if (!a.kind.empty()) {
      bool matches;
      try {
        const ReconstructionResult r = reconstruct(phi);
        matches = found.size() == 1 && found.front() == r.phi;
        report.result()["reconstruction"] = semilinear_to_json(r.phi);
      } catch (const Error& e) {
        if (!is_negative_outcome(e.code())) throw;
        matches = found.empty();
        report.result()["reconstruction"] = std::string(to_string(e.code()));
      }
      report.result()["matches_reconstruction"] = matches;
      ok = matches;
    }
    report.set_status(ok ? "ok" : "negative");
    return ok ? kExitOk : kExitNegative;
  });
}

}  // namespace fgeom::cli
