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
#ifndef FGEOM_TOOLS_RUN_REPORT_HPP_
#define FGEOM_TOOLS_RUN_REPORT_HPP_

#include <chrono>
#include <string>
#include <vector>

#include "fgeom/io.hpp"

namespace fgeom::cli {

std::string sha256_file(const std::string& path);

// Collects everything a subcommand reports. Timing is the only field that
// may differ between identical runs, and it is written last.
class RunReport {
 public:
  explicit RunReport(std::vector<std::string> argv);

  void add_input(const std::string& path);
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  Json& result() { return result_; }
  void set_status(std::string status) { status_ = std::move(status); }
  void set_error(const std::string& code, const std::string& message);

  Json to_json() const;

 private:
  std::vector<std::string> argv_;
  Json inputs_ = Json::object();
  std::optional<std::uint64_t> seed_;
  Json result_ = Json::object();
  std::string status_ = "ok";
  Json error_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace fgeom::cli

#endif  // FGEOM_TOOLS_RUN_REPORT_HPP_
