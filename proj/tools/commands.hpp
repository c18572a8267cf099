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
#ifndef FGEOM_TOOLS_COMMANDS_HPP_
#define FGEOM_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fgeom::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitUsage = 2,
  kExitConstructor = 3,
  kExitCap = 4,
};

struct Globals {
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> seed;
  bool witnesses = false;
  std::string out;
  std::vector<std::string> argv;
};

struct MakeExampleArgs {
  std::string name;
  std::string field = "gf(2)";
  int dim = 3;
  int count = 1;
  std::string subfield;
};

struct CheckArgs {
  std::string geometry;
  std::string axioms = "g";
  std::string map;
};

struct ClassifyArgs {
  std::string geometry;
  std::string ambient;
  std::vector<std::string> predicates;
};

struct QuotientArgs {
  std::string geometry;
  std::vector<int> points;
};

struct ReconstructArgs {
  std::string geometry;
  std::string map;
  std::string kind = "lp";
  int base_pair_rank = 0;
};

struct OracleArgs {
  std::string geometry;
  std::string map;
  std::uint64_t cap = std::uint64_t{1} << 24;
  std::string kind;
};

int cmd_make_example(const Globals& g, const MakeExampleArgs& a);
int cmd_check(const Globals& g, const CheckArgs& a);
int cmd_classify(const Globals& g, const ClassifyArgs& a);
int cmd_quotient(const Globals& g, const QuotientArgs& a);
int cmd_reconstruct(const Globals& g, const ReconstructArgs& a);
int cmd_oracle(const Globals& g, const OracleArgs& a);

}  // namespace fgeom::cli

#endif  // FGEOM_TOOLS_COMMANDS_HPP_
