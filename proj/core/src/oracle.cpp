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

#include <cmath>

#include "fgeom/error.hpp"
#include "fgeom/reconstruct.hpp"

namespace fgeom {

std::vector<SemilinearMap> brute_force_oracle(const MorphismInstance& phi,
                                              const OracleOptions& options) {
  const EmbeddedGeometry& x = *phi.domain;
  const ProjectiveSpace& dst = *phi.target;
  const Field& kp = dst.f();
  const int rows = dst.ambient_dim() + 1;
  const int cols = x.ambient_dim() + 1;
  const int entries = rows * cols;
  const auto homs = list_homomorphisms(x.field(), dst.field());
  const double space = std::pow(static_cast<double>(kp.order()), entries) *
                       static_cast<double>(homs.size());
  if (space > static_cast<double>(options.cap)) {
    throw Error(ErrorCode::kCapExceeded,
                "search space " + std::to_string(static_cast<std::uint64_t>(space)) +
                    " exceeds cap " + std::to_string(options.cap));
  }
  if (static_cast<int>(phi.map.size()) != x.size()) {
    throw Error(ErrorCode::kInvalidArgument, "map size differs from the domain");
  }
  std::vector<SemilinearMap> found;
  const std::uint64_t total = static_cast<std::uint64_t>(
      std::pow(static_cast<double>(kp.order()), entries));
  for (const FieldHom& sigma : homs) {
    std::vector<Vec> twisted;
    for (int p = 0; p < x.size(); ++p) twisted.push_back(apply_hom(sigma, x.coords(p)));
    Matrix m(rows, cols);
    for (std::uint64_t code = 0; code < total; ++code) {
      std::uint64_t c = code;
      for (int i = entries - 1; i >= 0; --i) {
        m(i / cols, i % cols) = static_cast<Elem>(c % kp.order());
        c /= kp.order();
      }
      // Only canonical representatives: first nonzero entry is 1.
      const auto data = m.data();
      const auto first = std::find_if(data.begin(), data.end(), [](Elem e) { return e != 0; });
      if (first == data.end() || *first != 1) continue;
      bool ok = true;
      for (int p = 0; p < x.size() && ok; ++p) {
        const Vec w = mat_vec(kp, m, twisted[p]);
        ok = !is_zero(w) && dst.point_of(w) == phi.map[p];
      }
      if (ok) found.emplace_back(sigma, m);
    }
  }
  return found;
}

}  // namespace fgeom
