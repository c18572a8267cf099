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

#ifndef FGEOM_REPORT_HPP_
#define FGEOM_REPORT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fgeom/linalg.hpp"

namespace fgeom {

// A concrete configuration backing a verdict, re-checkable on its own.
// `points` are indices into the geometry under test unless `ambient` is set,
// in which case they index the enclosing projective space.
struct Witness {
  std::string kind;
  std::vector<int> points;
  std::vector<Vec> vectors;
  bool ambient = false;
};

// Exhaustive checks fall back to seeded sampling past `limit` configurations.
struct CheckOptions {
  std::uint64_t limit = 2'000'000;
  std::uint64_t seed = 0xB1D;
};

struct AxiomVerdict {
  std::string name;
  bool holds = true;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::uint64_t checked = 0;
  std::vector<Witness> witnesses;
  std::string note;
};

struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;

  bool all_hold() const;
  // Throws kInvalidArgument for an unknown name.
  const AxiomVerdict& at(std::string_view name) const;
  bool holds(std::string_view name) const { return at(name).holds; }
};

// Verdict of a classification predicate. An empty `verdict` means the
// predicate does not apply to the input.
struct PredicateResult {
  std::string name;
  std::optional<bool> verdict;
  std::vector<Witness> witnesses;
  std::vector<Witness> certificates;
  std::map<std::string, std::int64_t> counts;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::string note;

  bool is_true() const { return verdict.value_or(false); }
};

}  // namespace fgeom

#endif  // FGEOM_REPORT_HPP_
