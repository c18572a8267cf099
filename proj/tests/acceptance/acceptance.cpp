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
// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "fgeom/classify.hpp"
#include "fgeom/error.hpp"
#include "fgeom/gallery.hpp"
#include "fgeom/io.hpp"
#include "fgeom/reconstruct.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace fgeom {
namespace {

using Clock = std::chrono::steady_clock;
using testing::random_semilinear;

// Failure details collected by a criterion; empty means pass.
struct Outcome {
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok && failures.size() < 8) failures.push_back(what);
    if (!ok && failures.size() == 8) failures.push_back("...");
  }
};

// Round-trip fixtures collected by 4 and 5, certified by 8.
struct Fixture {
  std::string label;
  MorphismInstance instance;
  ReconstructionResult result;
};
std::vector<Fixture> g_fixtures;

std::string ok_code(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return std::string(to_string(e.code()));
  }
  return "ok";
}

// ---------------------------------------------------------------------------

Outcome axiom_suite() {
  Outcome o;
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {3, 4}}) {
    const auto pg = build_pg(n, Field::get(q));
    const std::string tag = "PG(" + std::to_string(n) + "," + std::to_string(q) + ")";
    long expected = 0, pw = 1;
    for (int i = 0; i <= n; ++i, pw *= q) expected += pw;
    o.require(pg->size() == expected, tag + " point count");
    const AxiomReport g = check_geometry_axioms(*pg);
    const AxiomReport p = check_projective_axioms(*pg);
    for (const AxiomReport* r : {&g, &p}) {
      for (const AxiomVerdict& v : r->verdicts) {
        o.require(v.holds, tag + " " + v.name + " fails");
        o.require(!v.sampled, tag + " " + v.name + " was sampled");
      }
    }
  }
  const testing::NaiveField nf(2, 1);
  const auto pg32 = build_pg(3, Field::get(2));
  const auto lines = testing::pg_subspaces(nf, 3, 2);
  const auto planes = testing::pg_subspaces(nf, 3, 3);
  o.require(lines.size() == 35 && pg32->lines().size() == 35, "PG(3,2) line count");
  o.require(planes.size() == 15 && pg32->flats_of_dim(2).size() == 15, "PG(3,2) plane count");
  o.summary = "5 spaces, G1-G3/P1-P3/dimension formula exhaustive";
  return o;
}

int rank_over_target(const SemilinearMap& phi) {
  std::vector<Vec> cols;
  for (int c = 0; c < phi.source_coords(); ++c) cols.push_back(phi.matrix().column(c));
  return rank(*phi.target_field(), cols);
}

Outcome ftpg_round_trip() {
  Outcome o;
  std::mt19937_64 rng(0xACCE52);
  struct Config {
    int q, qp, sigma;
  };
  int total = 0;
  for (const Config c : {Config{2, 2, 0}, Config{3, 3, 0}, Config{4, 4, -1}, Config{2, 4, 0},
                         Config{2, 4, 1}}) {
    const FieldPtr k = Field::get(c.q), kp = Field::get(c.qp);
    const auto src = build_pg(3, k), dst = build_pg(3, kp);
    const int homs = static_cast<int>(list_homomorphisms(k, kp).size());
    for (int i = 0; i < 100; ++i) {
      const int sigma = c.sigma >= 0 ? c.sigma : i % homs;
      SemilinearMap phi = random_semilinear(rng, k, kp, 4, 4, 3, sigma);
      // Over a proper extension the kernel must be rational over the source
      // field, otherwise the induced map is not projectively determined.
      while (k != kp && rank_over_target(phi) + phi.kernel().dim() != 4) {
        phi = random_semilinear(rng, k, kp, 4, 4, 3, sigma);
      }
      const std::string tag = "GF(" + std::to_string(c.q) + ")->GF(" + std::to_string(c.qp) +
                              ") #" + std::to_string(i);
      try {
        const FtpgResult r = reconstruct_ftpg(src, dst, induced_point_map(phi, *src, *dst));
        o.require(proportional(phi, r.phi).has_value() && r.phi == phi.canonical(),
                  tag + " not proportional");
        o.require(r.exceptional == phi.kernel(), tag + " kernel differs");
      } catch (const Error& e) {
        o.require(false, tag + " " + e.what());
      }
      ++total;
    }
  }
  o.summary = std::to_string(total) + " maps";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(0xACCE53);
  const FieldPtr f = Field::get(2);
  const auto pg = build_pg(3, f);
  for (int i = 0; i < 20; ++i) {
    const SemilinearMap phi = random_semilinear(rng, f, f, 4, 4, 3, 0);
    const auto x = pg->restrict_to(pg->all_points() - pg->points_in(phi.kernel()));
    const auto inst = restrict_induced(phi, x, pg, MorphismKind::kFullProjective);
    const auto all = brute_force_oracle(inst);
    const ReconstructionResult r = reconstruct(inst);
    o.require(all.size() == 1 && all[0] == r.phi && r.phi == phi.canonical(),
              "instance " + std::to_string(i) + ": oracle returned " +
                  std::to_string(all.size()) + " classes");
  }
  o.summary = "20 instances, 65536 matrices each";
  return o;
}

struct GalleryCase {
  std::string label;
  EmbeddedPtr x;
};

void round_trips(Outcome& o, const std::vector<GalleryCase>& cases, MorphismKind kind,
                 std::uint64_t seed, int& count) {
  std::mt19937_64 rng(seed);
  for (const GalleryCase& c : cases) {
    const FieldPtr f = c.x->field();
    const auto pg = build_pg(3, f);
    const int homs = static_cast<int>(list_homomorphisms(f, f).size());
    for (int i = 0; i < 25; ++i) {
      const SemilinearMap phi = random_semilinear(rng, f, f, 4, 4, 4, i % homs);
      const auto inst = restrict_induced(phi, c.x, pg, kind);
      const std::string tag = c.label + " #" + std::to_string(i);
      try {
        const ReconstructionResult r = reconstruct(inst);
        const ReconstructionResult r2 = reconstruct(inst, {1});
        o.require(proportional(phi, r.phi).has_value(), tag + " not recovered");
        o.require(proportional(r.phi, r2.phi).has_value(), tag + " next base pair differs");
        o.require(r.base_points != r2.base_points, tag + " base pair not advanced");
        g_fixtures.push_back({tag, inst, r});
        ++count;
      } catch (const Error& e) {
        o.require(false, tag + " " + e.what());
      }
    }
  }
}

Outcome locally_projective_round_trip() {
  Outcome o;
  const FieldPtr f3 = Field::get(3), f4 = Field::get(4);
  const auto pg34 = build_pg(3, f4);
  const std::vector<GalleryCase> cases = {
      {"AG(3,3)", make_affine(3, f3)},
      {"AG(3,4)", make_affine(3, f4)},
      {"PG(3,4) minus two planes",
       make_complement(pg34, {pg34->hyperplanes()[0], pg34->hyperplanes()[1]})},
      {"two hyperplanes in PG(3,3)", make_two_hyperplanes(build_pg(3, f3))},
      {"PG(3,4) minus PG(3,2)", make_subfield_complement(3, Field::get(2), f4)},
  };
  int count = 0;
  round_trips(o, cases, MorphismKind::kLocallyProjective, 0xACCE54, count);
  o.summary = std::to_string(count) + "/125 recovered, uniqueness re-checked";
  return o;
}

Outcome locally_affino_round_trip() {
  Outcome o;
  const FieldPtr f2 = Field::get(2), f3 = Field::get(3), f4 = Field::get(4);
  const std::vector<GalleryCase> cases = {
      {"elliptic quadric PG(3,3)", make_quadric(f3, QuadricForm::kElliptic)},
      {"elliptic quadric PG(3,4)", make_quadric(f4, QuadricForm::kElliptic)},
      {"hyperbolic quadric PG(3,4)", make_quadric(f4, QuadricForm::kHyperbolic)},
      {"cone PG(3,3)", make_quadric(f3, QuadricForm::kCone)},
      {"cone PG(3,4)", make_quadric(f4, QuadricForm::kCone)},
  };
  int count = 0;
  round_trips(o, cases, MorphismKind::kLocallyAffinoProjective, 0xACCE55, count);

  // Over GF(2) the field clause fails.
  const auto pg2 = build_pg(3, f2);
  const SemilinearMap id2(FieldHom::identity(f2), Matrix::identity(4));
  for (QuadricForm form : {QuadricForm::kElliptic, QuadricForm::kHyperbolic, QuadricForm::kCone}) {
    const auto inst = restrict_induced(id2, make_quadric(f2, form), pg2,
                                       MorphismKind::kLocallyAffinoProjective);
    o.require(ok_code([&] { reconstruct(inst); }) == "FieldClauseViolated",
              "GF(2) quadric not rejected by the field clause");
  }

  // |K| = 3 = char K' with K' = GF(9).
  std::mt19937_64 rng(0xACCE56);
  const FieldPtr f9 = Field::get(9);
  const auto pg9 = build_pg(3, f9);
  int accepted = 0;
  for (QuadricForm form : {QuadricForm::kElliptic, QuadricForm::kCone}) {
    const auto x = make_quadric(f3, form);
    for (int i = 0; i < 5; ++i) {
      const SemilinearMap phi = random_semilinear(rng, f3, f9, 4, 4, 4, 0);
      const auto inst = restrict_induced(phi, x, pg9, MorphismKind::kLocallyAffinoProjective);
      try {
        const ReconstructionResult r = reconstruct(inst);
        o.require(proportional(phi, r.phi).has_value(), "GF(3)->GF(9) not recovered");
        ++accepted;
      } catch (const Error& e) {
        o.require(false, std::string("GF(3)->GF(9) rejected: ") + e.what());
      }
    }
  }
  o.summary = std::to_string(count) + "/125 recovered, GF(2) rejected, " +
              std::to_string(accepted) + "/10 GF(3)->GF(9) accepted";
  return o;
}

Outcome classifier_coherence() {
  Outcome o;
  const FieldPtr f2 = Field::get(2), f3 = Field::get(3), f4 = Field::get(4);
  const auto pg32 = build_pg(3, f2), pg33 = build_pg(3, f3), pg34 = build_pg(3, f4);
  const std::vector<GalleryCase> gallery = {
      {"PG(3,2)", pg32},
      {"AG(3,2)", make_affine(3, f2)},
      {"AG(3,3)", make_affine(3, f3)},
      {"AG(3,4)", make_affine(3, f4)},
      {"PG(3,4) minus two planes",
       make_complement(pg34, {pg34->hyperplanes()[0], pg34->hyperplanes()[1]})},
      {"PG(3,3) minus three planes",
       make_complement(pg33, {pg33->hyperplanes()[0], pg33->hyperplanes()[1],
                              pg33->hyperplanes()[2]})},
      {"two hyperplanes in PG(3,2)", make_two_hyperplanes(pg32)},
      {"two hyperplanes in PG(3,3)", make_two_hyperplanes(pg33)},
      {"coordinate hyperplanes in PG(3,2)", make_coordinate_hyperplanes(pg32)},
      {"PG(3,4) minus PG(3,2)", make_subfield_complement(3, f2, f4)},
      {"elliptic quadric PG(3,3)", make_quadric(f3, QuadricForm::kElliptic)},
      {"elliptic quadric PG(3,4)", make_quadric(f4, QuadricForm::kElliptic)},
      {"hyperbolic quadric PG(3,2)", make_quadric(f2, QuadricForm::kHyperbolic)},
      {"hyperbolic quadric PG(3,4)", make_quadric(f4, QuadricForm::kHyperbolic)},
      {"cone PG(3,3)", make_quadric(f3, QuadricForm::kCone)},
      {"cone PG(3,4)", make_quadric(f4, QuadricForm::kCone)},
  };
  for (const GalleryCase& c : gallery) {
    const ClassificationReport r = classify(*c.x);
    for (const auto& [name, ok] : r.coherence) o.require(ok, c.label + ": " + name);
    auto v = [&](const char* name) { return r.find(name)->verdict; };
    if (v("line_condition") == true) {
      o.require(v("locally_projective") == true, c.label + ": line condition without lp");
    }
    const PredicateResult* lp = r.find("locally_projective");
    o.require(lp->counts.count("route_disagreements") &&
                  lp->counts.at("route_disagreements") == 0,
              c.label + ": quotient and local dimension routes disagree");
    const bool benz = c.label.find("quadric") != std::string::npos ||
                      c.label.find("cone") != std::string::npos;
    if (benz) {
      o.require(v("locally_affino_projective") == true, c.label + ": not lap");
    }
    if (c.label.rfind("elliptic", 0) == 0) {
      o.require(v("mobius") == true && v("ovoid") == true, c.label + ": not Mobius/ovoid");
    }
    if (c.label.rfind("hyperbolic", 0) == 0) {
      o.require(v("mobius") == false && v("ovoid") == false, c.label + ": Mobius/ovoid");
    }
  }
  o.summary = std::to_string(gallery.size()) + " gallery geometries";
  return o;
}

Outcome fibred_product_identity() {
  Outcome o;
  std::mt19937_64 rng(0xACCE57);
  int checked = 0;
  for (int q : {2, 3}) {
    const FieldPtr f = Field::get(q);
    const testing::NaiveField nf(q, 1);
    for (int i = 0; i < 10; ++i) {
      Vec v1, v2;
      do {
        v1 = testing::random_vector(rng, *f, 4);
        v2 = testing::random_vector(rng, *f, 4);
      } while (rank(*f, {v1, v2}) < 2);
      const FibredProductReport rep = verify_fibred_product(f, 4, v1, v2);
      const testing::FibredCounts c = testing::fibred_product_counts(
          nf, {v1.begin(), v1.end()}, {v2.begin(), v2.end()});
      const long n = static_cast<long>(q) * q * q * q;
      o.require(rep.bijective && rep.injective, "library reports a non-bijective lift");
      o.require(c.image == n && c.product == n, "enumeration: lift is not onto the product");
      o.require(rep.image_size == c.image && rep.product_size == c.product,
                "library and enumeration counts differ");
      ++checked;
    }
  }
  o.summary = std::to_string(checked) + " subspace pairs";
  return o;
}

Outcome side_conditions() {
  Outcome o;
  int injective = 0, embeddings = 0;
  for (const Fixture& fx : g_fixtures) {
    const SideConditionReport rep = certify_side_conditions(fx.result, fx.instance);
    o.require(rep.holds, fx.label + ": side conditions fail");
    if (rep.injective && rep.kernel_promised) {
      ++injective;
      o.require(rep.kernel_zero, fx.label + ": injective with nonzero kernel");
    }
    if (rep.embedding && rep.kernel_promised) {
      ++embeddings;
      o.require(rep.extension_embedding_checked && rep.extension_is_embedding,
                fx.label + ": extension is not an embedding");
    }
  }
  o.require(injective > 0 && embeddings > 0, "no fixtures were certified");

  // Non-injective: PG(4,2) -> PG(3,2) with a point kernel, X = AG(4,2).
  const FieldPtr f2 = Field::get(2);
  const auto pg42 = build_pg(4, f2), pg32 = build_pg(3, f2);
  Matrix m(4, 5);
  for (int i = 0; i < 4; ++i) m(i, i) = 1;
  m(0, 4) = 1;
  const SemilinearMap proj(FieldHom::identity(f2), m);
  int h = 0;
  while (!proj.kernel().is_subspace_of(pg42->hyperplanes()[h])) ++h;
  const auto x = make_complement(pg42, {pg42->hyperplanes()[h]});
  const auto inst = restrict_induced(proj, x, pg32, MorphismKind::kLocallyProjective);
  try {
    const ReconstructionResult r = reconstruct(inst);
    const SideConditionReport rep = certify_side_conditions(r, inst);
    o.require(!rep.injective && !rep.kernel_zero && r.exceptional.dim() == 1,
              "non-injective fixture: kernel not detected");
    o.require(rep.holds && !rep.kernel_promised && !rep.notes.empty(),
              "non-injective fixture: report incorrect");
    o.require(proportional(proj, r.phi).has_value(), "non-injective fixture not recovered");
  } catch (const Error& e) {
    o.require(false, std::string("non-injective fixture: ") + e.what());
  }
  o.summary = std::to_string(injective) + " kernel-zero, " + std::to_string(embeddings) +
              " embedding certificates, non-injective fixture reported";
  return o;
}

// --- determinism -------------------------------------------------------------

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(FGEOM_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  pclose(pipe);
  return out;
}

std::string strip_timing(const std::string& report) {
  try {
    Json j = Json::parse(report);
    j.erase("timing_ms");
    return j.dump();
  } catch (const std::exception&) {
    return report;
  }
}

// An in-process report covering classification and reconstruction.
std::string library_report() {
  Json j = Json::array();
  std::mt19937_64 rng(0xACCE59);
  const FieldPtr f3 = Field::get(3);
  const auto pg = build_pg(3, f3);
  for (const EmbeddedPtr& x :
       {make_affine(3, f3), make_quadric(f3, QuadricForm::kCone),
        make_quadric(f3, QuadricForm::kElliptic), make_two_hyperplanes(pg)}) {
    j.push_back(to_json(classify(*x), true));
    const SemilinearMap phi = random_semilinear(rng, f3, f3, 4, 4, 4, 0);
    const MorphismKind kind = classify(*x).find("locally_projective")->is_true()
                                  ? MorphismKind::kLocallyProjective
                                  : MorphismKind::kLocallyAffinoProjective;
    const auto inst = restrict_induced(phi, x, pg, kind);
    const ReconstructionResult r = reconstruct(inst);
    j.push_back(to_json(r));
    j.push_back(to_json(certify_side_conditions(r, inst)));
  }
  return j.dump();
}

Outcome determinism() {
  Outcome o;
  o.require(library_report() == library_report(), "library reports differ");

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "fgeom_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string geo = (dir / "hyp.json").string(), map = (dir / "phi.json").string();
  const FieldPtr f4 = Field::get(4);
  const auto x = make_quadric(f4, QuadricForm::kHyperbolic);
  std::mt19937_64 rng(0xACCE5A);
  const SemilinearMap phi = random_semilinear(rng, f4, f4, 4, 4, 4, 1);
  std::ofstream(geo) << geometry_to_json(*x).dump(2);
  std::ofstream(map) << map_to_json(restrict_induced(phi, x, build_pg(3, f4),
                                                     MorphismKind::kLocallyAffinoProjective))
                            .dump(2);
  const std::vector<std::string> commands = {
      "make-example --name cone --field 'gf(4)'",
      "--witnesses check --axioms p --geometry " + geo,
      "--witnesses --seed 9 classify --geometry " + geo,
      "quotient --geometry " + geo + " --points 0",
      "reconstruct --geometry " + geo + " --map " + map + " --kind lap",
  };
  int compared = 0;
  for (const std::string& c : commands) {
    const std::string a = strip_timing(run_cli(c)), b = strip_timing(run_cli(c));
    o.require(!a.empty() && a == b, "CLI report differs: " + c);
    ++compared;
  }
  fs::remove_all(dir);
  o.summary = "library report + " + std::to_string(compared) + " CLI reports, byte-identical";
  return o;
}

}  // namespace
}  // namespace fgeom

int main() {
  using fgeom::Outcome;
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0: no timing bound
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "axiom suite", 10, fgeom::axiom_suite},
      {2, "FTPG round-trip", 60, fgeom::ftpg_round_trip},
      {3, "oracle equivalence", 30, fgeom::oracle_equivalence},
      {4, "locally projective round-trip", 0, fgeom::locally_projective_round_trip},
      {5, "locally affino-projective round-trip", 0, fgeom::locally_affino_round_trip},
      {6, "classifier coherence", 0, fgeom::classifier_coherence},
      {7, "fibred product identity", 0, fgeom::fibred_product_identity},
      {8, "kernel and embedding certification", 0, fgeom::side_conditions},
      {9, "determinism", 0, fgeom::determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = fgeom::Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("uncaught: ") + e.what());
    }
    const double s = std::chrono::duration<double>(fgeom::Clock::now() - t0).count();
    if (c.budget_s > 0 && s >= c.budget_s) {
      o.require(false, "runtime budget exceeded");
    }
    const bool pass = o.failures.empty();
    failed += !pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " -- "
         << o.summary << " (" << s << " s";
    if (c.budget_s > 0) line << ", budget " << c.budget_s << " s";
    line << ")";
    std::cout << line.str() << std::endl;
    for (const std::string& f : o.failures) std::cout << "      " << f << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
