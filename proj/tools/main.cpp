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
// fgeom: construction, classification and reconstruction of finite
// geometries from the command line.

#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace fgeom::cli;
  CLI::App app{"Finite incidence geometries over Galois fields", "fgeom"};
  app.require_subcommand(1);

  Globals g;
  for (int i = 0; i < argc; ++i) g.argv.emplace_back(i == 0 ? "fgeom" : argv[i]);
  app.add_option("--limit", g.limit, "Exhaustive-check budget before sampling");
  app.add_option("--seed", g.seed, "Seed for sampled checks");
  app.add_flag("--witnesses", g.witnesses, "Include witnesses and certificates");
  app.add_option("--out", g.out, "Output file");

  MakeExampleArgs mk;
  auto* make = app.add_subcommand("make-example", "Write a gallery geometry");
  make->add_option("--name", mk.name, "Constructor name")->required();
  make->add_option("--field", mk.field, "Field designator gf(q)");
  make->add_option("--dim", mk.dim, "Projective dimension");
  make->add_option("--count", mk.count, "Hyperplanes removed by 'complement'");
  make->add_option("--subfield", mk.subfield, "Subfield for 'subfield-complement'");

  CheckArgs ck;
  auto* check = app.add_subcommand("check", "Check axioms or a morphism");
  check->add_option("--geometry", ck.geometry, "Geometry file")->required();
  check->add_option("--axioms", ck.axioms, "g, p, lp or morphism")
      ->check(CLI::IsMember({"g", "p", "lp", "morphism"}));
  check->add_option("--map", ck.map, "Map file for --axioms morphism");

  ClassifyArgs cl;
  auto* classify = app.add_subcommand("classify", "Run the classification predicates");
  classify->add_option("--geometry", cl.geometry, "Geometry file")->required();
  classify->add_option("--ambient", cl.ambient, "Expected ambient pg(n,q)");
  classify->add_option("--predicate", cl.predicates, "Predicates to run (repeatable)");

  QuotientArgs qu;
  auto* quotient = app.add_subcommand("quotient", "Quotient by the closure of points");
  quotient->add_option("--geometry", qu.geometry, "Geometry file")->required();
  quotient->add_option("--points", qu.points, "Point indices spanning the flat")->required();

  ReconstructArgs rc;
  auto* reconstruct = app.add_subcommand("reconstruct", "Reconstruct the inducing semilinear map");
  reconstruct->add_option("--geometry", rc.geometry, "Geometry file")->required();
  reconstruct->add_option("--map", rc.map, "Map file")->required();
  reconstruct->add_option("--kind", rc.kind, "pg, lp, ap or lap")
      ->check(CLI::IsMember({"pg", "lp", "ap", "lap"}));
  reconstruct->add_option("--base-pair-rank", rc.base_pair_rank, "Use the k-th admissible base pair");

  OracleArgs orc;
  auto* oracle = app.add_subcommand("oracle", "Enumerate all inducing semilinear maps");
  oracle->add_option("--geometry", orc.geometry, "Geometry file")->required();
  oracle->add_option("--map", orc.map, "Map file")->required();
  oracle->add_option("--cap", orc.cap, "Search-space cap");
  oracle->add_option("--kind", orc.kind, "Also reconstruct with this kind and compare")
      ->check(CLI::IsMember({"pg", "lp", "ap", "lap"}));

  for (auto* sub : {make, check, classify, quotient, reconstruct, oracle}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*make) return cmd_make_example(g, mk);
  if (*check) return cmd_check(g, ck);
  if (*classify) return cmd_classify(g, cl);
  if (*quotient) return cmd_quotient(g, qu);
  if (*reconstruct) return cmd_reconstruct(g, rc);
  return cmd_oracle(g, orc);
}
