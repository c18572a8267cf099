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

#ifndef FGEOM_RECONSTRUCT_HPP_
#define FGEOM_RECONSTRUCT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fgeom/embedded.hpp"
#include "fgeom/projective.hpp"

namespace fgeom {

enum class MorphismKind {
  kFullProjective,          // "pg"
  kLocallyProjective,       // "lp"
  kAffinoProjective,        // "ap"
  kLocallyAffinoProjective  // "lap"
};

std::string_view to_string(MorphismKind kind);
// Throws kInvalidArgument for unknown names.
MorphismKind parse_kind(std::string_view name);

// A point map X -> PG(m, q'), X embedded in PG(n, q).
struct MorphismInstance {
  EmbeddedPtr domain;
  SpacePtr target;
  std::vector<int> map;  // point of domain -> point of target
  MorphismKind kind = MorphismKind::kLocallyProjective;
};

// Restriction of the projectivization of phi to X; throws kVerificationFailed
// if X meets P(ker phi).
MorphismInstance restrict_induced(const SemilinearMap& phi,
                                  const EmbeddedPtr& domain,
                                  const SpacePtr& target, MorphismKind kind);

struct FtpgOptions {
  // Permutation of the frame basis; empty keeps the canonical order.
  std::vector<int> frame_order;
};

struct FtpgResult {
  SemilinearMap phi;  // canonically scaled
  LinearSubspace exceptional;
  std::vector<std::string> transcript;
};

// A partial map PG(n,K) --> PG(m,K') given on every point (-1 where
// undefined). Throws kImageInLine, kExceptionalNotFlat,
// kSigmaNotHomomorphism, kVerificationFailed or kInternalContradiction.
FtpgResult reconstruct_ftpg(const SpacePtr& src, const SpacePtr& dst,
                            std::span<const int> map,
                            const FtpgOptions& options = {});
// Same, for a PartialMorphism whose source and target are projective spaces.
FtpgResult reconstruct_ftpg(const PartialMorphism& psi,
                            const FtpgOptions& options = {});

// [x] -> [phi(x)] from X/x0 into P'/phi(x0), both coordinatized by the
// echelon complement of the point.
struct InducedQuotient {
  SpacePtr source;  // P/x0
  SpacePtr target;  // P'/x0'
  LinearSubspace source_w;
  LinearSubspace target_w;
  // Classes reached by X; map is -1 on the exceptional classes F/x0 and on
  // classes outside covered.
  PointSet covered;
  PointSet exceptional;
  std::vector<int> map;
  bool image_spans_plane = false;
};

// Throws kVerificationFailed when phi is not constant on the classes.
InducedQuotient induced_quotient_map(const MorphismInstance& phi, int x0);

// lambda * phi1 whose reduction modulo <v1', v2'> equals that of phi2.
// Both maps are lifted to V (they kill v1 and v2 respectively). Throws
// kNotProportional.
SemilinearMap normalize_pair(const SemilinearMap& lift1,
                             const SemilinearMap& lift2,
                             const LinearSubspace& target_w12);

// The unique Phi: V -> V' with [Phi(v)] = lift_i(v) in V'/<vi'>. Throws
// kReductionsDisagree or kLiftInconsistent.
SemilinearMap glue_fibred_product(const SemilinearMap& lift1,
                                  const SemilinearMap& lift2,
                                  std::span<const Elem> v1p,
                                  std::span<const Elem> v2p);

struct FibredProductReport {
  std::int64_t domain_size = 0;
  std::int64_t product_size = 0;
  std::int64_t image_size = 0;
  bool injective = false;
  bool bijective = false;
};

// Enumerates V = K^dim against V/<v1> x_{V/<v1,v2>} V/<v2>.
FibredProductReport verify_fibred_product(const FieldPtr& field, int dim,
                                          std::span<const Elem> v1,
                                          std::span<const Elem> v2);

struct Certificate {
  std::vector<std::string> transcript;
  std::int64_t verified_points = 0;
  int sigma_power = 0;
  Elem scalar_normalization = 1;
};

struct ReconstructionResult {
  SemilinearMap phi;  // canonically scaled
  LinearSubspace exceptional;
  std::vector<int> base_points;
  Certificate certificate;
};

struct ReconstructOptions {
  // 0 picks the first admissible base pair in canonical order, 1 the next.
  int base_pair_rank = 0;
};

// Field clause |K| >= 4 or |K| = 3 = char K'.
bool field_clause_holds(const Field& k, const Field& kp);

ReconstructionResult reconstruct_locally_projective(
    const MorphismInstance& phi, const ReconstructOptions& options = {});
ReconstructionResult reconstruct_locally_affino(
    const MorphismInstance& phi, const ReconstructOptions& options = {});
// Extension to the ambient space followed by reconstruct_ftpg.
ReconstructionResult reconstruct_affino(const MorphismInstance& phi);
// Dispatches on phi.kind.
ReconstructionResult reconstruct(const MorphismInstance& phi,
                                 const ReconstructOptions& options = {});

struct AffinoExtension {
  std::vector<int> map;  // every point of the ambient space; -1 on E
  PointSet exceptional;
  int hyperplane = -1;
};

// Extends a map given on `domain` (values -1 allowed for exceptional points)
// to all of `src` by the line-intersection rule. Throws kFieldClauseViolated,
// kInconsistentExtension, kExceptionalNotFlat, or kInvalidArgument when the
// domain is not affino-projective.
AffinoExtension extend_affino(const SpacePtr& src, const SpacePtr& dst,
                              const PointSet& domain,
                              std::span<const int> map);
AffinoExtension extend_affino(const MorphismInstance& phi);

struct SideConditionReport {
  bool injective = false;
  bool embedding = false;
  // Hypotheses under which a trivial kernel is promised.
  bool kernel_promised = false;
  bool kernel_zero = false;
  std::optional<int> tangent_point;  // ambient point violating the scan
  bool extension_embedding_checked = false;
  bool extension_is_embedding = false;
  bool holds = true;
  std::vector<std::string> notes;
};

SideConditionReport certify_side_conditions(const ReconstructionResult& r,
                                            const MorphismInstance& phi,
                                            const CheckOptions& options = {});

struct OracleOptions {
  std::uint64_t cap = std::uint64_t{1} << 24;
};

// Every canonical semilinear map whose projectivization agrees with phi on
// X and whose kernel avoids X. Throws kCapExceeded.
std::vector<SemilinearMap> brute_force_oracle(const MorphismInstance& phi,
                                              const OracleOptions& options = {});

}  // namespace fgeom

#endif  // FGEOM_RECONSTRUCT_HPP_
