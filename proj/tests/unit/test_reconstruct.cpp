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
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fgeom/error.hpp"
#include "fgeom/gallery.hpp"
#include "fgeom/reconstruct.hpp"
#include "support/generators.hpp"

namespace fgeom {
namespace {

using testing::random_matrix;
using testing::random_semilinear;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

std::vector<int> identity_map(int n) {
  std::vector<int> m(n);
  std::iota(m.begin(), m.end(), 0);
  return m;
}

TEST(Ftpg, IdentityAndFrobenius) {
  const auto pg = build_pg(3, Field::get(2));
  const FtpgResult r = reconstruct_ftpg(pg, pg, identity_map(pg->size()));
  EXPECT_EQ(r.phi.matrix(), Matrix::identity(4));
  EXPECT_TRUE(r.phi.sigma().is_identity());
  EXPECT_EQ(r.exceptional.dim(), 0);

  const FieldPtr f4 = Field::get(4);
  const auto pg4 = build_pg(3, f4);
  const SemilinearMap frob(FieldHom::from_power(f4, f4, 1), Matrix::identity(4));
  const FtpgResult rf = reconstruct_ftpg(pg4, pg4, induced_point_map(frob, *pg4, *pg4));
  EXPECT_EQ(rf.phi.matrix(), Matrix::identity(4));
  EXPECT_EQ(rf.phi.sigma().frobenius_power(), 1);
}

TEST(Ftpg, ProjectionFromAPoint) {
  const FieldPtr f = Field::get(3);
  const auto src = build_pg(3, f);
  const auto dst = build_pg(2, f);
  Matrix m(3, 4);
  m(0, 0) = m(1, 1) = m(2, 2) = 1;
  const SemilinearMap phi(FieldHom::identity(f), m);
  const FtpgResult r = reconstruct_ftpg(src, dst, induced_point_map(phi, *src, *dst));
  EXPECT_TRUE(proportional(phi, r.phi).has_value());
  EXPECT_EQ(r.exceptional.dim(), 1);
  EXPECT_TRUE(r.exceptional.contains(Vec{0, 0, 0, 1}));
}

TEST(Ftpg, Errors) {
  const FieldPtr f = Field::get(3);
  const auto pg = build_pg(3, f);
  // Rank-2 image: a line.
  Matrix m(4, 4);
  m(0, 0) = m(1, 1) = 1;
  const SemilinearMap line(FieldHom::identity(f), m);
  EXPECT_EQ(code_of([&] { reconstruct_ftpg(pg, pg, induced_point_map(line, *pg, *pg)); }),
            ErrorCode::kImageInLine);
  // Undefined set that is not a flat.
  std::vector<int> map = identity_map(pg->size());
  map[0] = map[1] = -1;
  EXPECT_EQ(code_of([&] { reconstruct_ftpg(pg, pg, map); }), ErrorCode::kExceptionalNotFlat);
  // Not a morphism: swap two points.
  std::vector<int> bad = identity_map(pg->size());
  std::swap(bad[5], bad[17]);
  const ErrorCode c = code_of([&] { reconstruct_ftpg(pg, pg, bad); });
  EXPECT_TRUE(c == ErrorCode::kVerificationFailed || c == ErrorCode::kSigmaNotHomomorphism ||
              c == ErrorCode::kInternalContradiction);
}

TEST(Ftpg, FrameIndependence) {
  std::mt19937_64 rng(41);
  const FieldPtr f = Field::get(4);
  const auto pg = build_pg(3, f);
  for (int trial = 0; trial < 10; ++trial) {
    const SemilinearMap phi = random_semilinear(rng, f, f, 4, 4, 3, trial);
    const auto map = induced_point_map(phi, *pg, *pg);
    const FtpgResult base = reconstruct_ftpg(pg, pg, map);
    FtpgOptions o;
    o.frame_order.resize(4 - base.exceptional.dim());
    std::iota(o.frame_order.begin(), o.frame_order.end(), 0);
    std::shuffle(o.frame_order.begin(), o.frame_order.end(), rng);
    const FtpgResult perm = reconstruct_ftpg(pg, pg, map, o);
    EXPECT_EQ(perm.phi, base.phi);
    EXPECT_TRUE(proportional(phi, base.phi).has_value());
  }
}

TEST(InducedQuotient, Examples) {
  const FieldPtr f2 = Field::get(2);
  const auto pg = build_pg(3, f2);
  const SemilinearMap id(FieldHom::identity(f2), Matrix::identity(4));
  const MorphismInstance inst = restrict_induced(id, pg, pg, MorphismKind::kFullProjective);
  const InducedQuotient q = induced_quotient_map(inst, 0);
  EXPECT_TRUE(q.exceptional.empty());
  EXPECT_TRUE(q.image_spans_plane);
  EXPECT_EQ(reconstruct_ftpg(q.source, q.target, q.map).phi.matrix(), Matrix::identity(3));

  const FieldPtr f4 = Field::get(4);
  const auto pg4 = build_pg(3, f4);
  const SemilinearMap frob(FieldHom::from_power(f4, f4, 1), Matrix::identity(4));
  const InducedQuotient qf = induced_quotient_map(
      restrict_induced(frob, pg4, pg4, MorphismKind::kFullProjective), 0);
  EXPECT_EQ(reconstruct_ftpg(qf.source, qf.target, qf.map).phi.sigma().frobenius_power(), 1);

  // Constant on a plane through x0: the exceptional set grows.
  Matrix m = Matrix::identity(4);
  m(1, 1) = m(2, 2) = 0;
  const SemilinearMap flat(FieldHom::identity(f2), m);
  const auto dom = pg->restrict_to(pg->all_points() -
                                   pg->points_in(flat.kernel()));
  const MorphismInstance inst2 = restrict_induced(flat, dom, pg, MorphismKind::kLocallyProjective);
  const int x0 = *dom->index_of(Vec{1, 0, 0, 0});
  const InducedQuotient q2 = induced_quotient_map(inst2, x0);
  EXPECT_FALSE(q2.exceptional.empty());
}

TEST(NormalizePair, Examples) {
  std::mt19937_64 rng(42);
  const FieldPtr f5 = Field::get(5);
  const SemilinearMap phi = random_semilinear(rng, f5, f5, 4, 4, 4, 0);
  const auto w12 = LinearSubspace::span(f5, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  EXPECT_EQ(normalize_pair(phi, phi, w12), phi);
  EXPECT_EQ(normalize_pair(phi, phi.scaled(2), w12), phi.scaled(2));
  const FieldPtr f4 = Field::get(4);
  const SemilinearMap a = random_semilinear(rng, f4, f4, 4, 4, 4, 0);
  const SemilinearMap b(FieldHom::from_power(f4, f4, 1), a.matrix());
  const auto w4 = LinearSubspace::span(f4, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  EXPECT_EQ(code_of([&] { normalize_pair(a, b, w4); }), ErrorCode::kNotProportional);
}

SemilinearMap reduce_columns(const SemilinearMap& phi, const LinearSubspace& w) {
  Matrix m = phi.matrix();
  for (int c = 0; c < m.cols(); ++c) m.set_column(c, w.reduce(m.column(c)));
  return SemilinearMap(phi.sigma(), m);
}

TEST(Glue, RecoversKnownMap) {
  std::mt19937_64 rng(43);
  const FieldPtr f3 = Field::get(3);
  for (int trial = 0; trial < 30; ++trial) {
    const SemilinearMap phi = random_semilinear(rng, f3, f3, 4, 4, 3, 0);
    Vec v1, v2;
    do {
      v1 = testing::random_vector(rng, *f3, 4);
      v2 = testing::random_vector(rng, *f3, 4);
    } while (rank(*f3, {v1, v2}) < 2);
    const auto l1 = reduce_columns(phi, LinearSubspace::span(f3, 4, {v1}));
    const auto l2 = reduce_columns(phi, LinearSubspace::span(f3, 4, {v2}));
    EXPECT_EQ(glue_fibred_product(l1, l2, v1, v2), phi);
    if (trial == 0) {
      EXPECT_EQ(code_of([&] { glue_fibred_product(l1, l2.scaled(2), v1, v2); }),
                ErrorCode::kReductionsDisagree);
    }
  }
  const SemilinearMap zero(FieldHom::identity(f3), Matrix(4, 4));
  EXPECT_TRUE(glue_fibred_product(zero, zero, Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}).is_zero());
}

TEST(FibredProduct, BijectiveForComplementaryPairs) {
  const FieldPtr f = Field::get(3);
  const auto rep = verify_fibred_product(f, 4, Vec{1, 0, 0, 0}, Vec{0, 1, 1, 0});
  EXPECT_TRUE(rep.bijective);
  EXPECT_EQ(rep.domain_size, 81);
  EXPECT_EQ(rep.product_size, 81);
}

TEST(FieldClause, Table) {
  EXPECT_FALSE(field_clause_holds(*Field::get(2), *Field::get(2)));
  EXPECT_FALSE(field_clause_holds(*Field::get(2), *Field::get(4)));
  EXPECT_TRUE(field_clause_holds(*Field::get(3), *Field::get(3)));
  EXPECT_TRUE(field_clause_holds(*Field::get(3), *Field::get(9)));
  EXPECT_TRUE(field_clause_holds(*Field::get(4), *Field::get(16)));
  EXPECT_TRUE(field_clause_holds(*Field::get(5), *Field::get(5)));
}

TEST(ExtendAffino, Examples) {
  std::mt19937_64 rng(44);
  for (int q : {3, 4}) {
    const FieldPtr f = Field::get(q);
    const auto pg = build_pg(3, f);
    const auto ag = make_affine(3, f);
    const SemilinearMap phi = random_semilinear(rng, f, f, 4, 4, 4, 1);
    const AffinoExtension ext =
        extend_affino(restrict_induced(phi, ag, pg, MorphismKind::kAffinoProjective));
    EXPECT_EQ(ext.map, induced_point_map(phi, *pg, *pg)) << "q=" << q;
    EXPECT_TRUE(ext.exceptional.empty());
  }
  const FieldPtr f2 = Field::get(2);
  const auto pg2 = build_pg(3, f2);
  const SemilinearMap id(FieldHom::identity(f2), Matrix::identity(4));
  EXPECT_EQ(code_of([&] {
              extend_affino(restrict_induced(id, make_affine(3, f2), pg2,
                                             MorphismKind::kAffinoProjective));
            }),
            ErrorCode::kFieldClauseViolated);
}

TEST(ReconstructLp, Examples) {
  std::mt19937_64 rng(45);
  const FieldPtr f3 = Field::get(3);
  const auto pg3 = build_pg(3, f3);
  const SemilinearMap phi = random_semilinear(rng, f3, f3, 4, 4, 4, 0);
  const auto ag = make_affine(3, f3);
  const ReconstructionResult r =
      reconstruct_locally_projective(restrict_induced(phi, ag, pg3, MorphismKind::kLocallyProjective));
  EXPECT_TRUE(proportional(phi, r.phi).has_value());
  EXPECT_EQ(r.certificate.verified_points, 27);
  EXPECT_EQ(r.base_points.size(), 2u);

  const FieldPtr f2 = Field::get(2);
  const auto pg2 = build_pg(3, f2);
  const SemilinearMap id(FieldHom::identity(f2), Matrix::identity(4));
  EXPECT_EQ(reconstruct_locally_projective(
                restrict_induced(id, pg2, pg2, MorphismKind::kLocallyProjective))
                .phi.matrix(),
            Matrix::identity(4));

  const auto two = make_two_hyperplanes(pg3);
  const SemilinearMap psi = random_semilinear(rng, f3, f3, 4, 4, 4, 0);
  const auto inst = restrict_induced(psi, two, pg3, MorphismKind::kLocallyProjective);
  const ReconstructionResult r2 = reconstruct_locally_projective(inst);
  EXPECT_TRUE(proportional(psi, r2.phi).has_value());
  EXPECT_EQ(reconstruct_locally_projective(inst, {1}).phi, r2.phi);
}

TEST(ReconstructLp, HypothesisErrors) {
  const FieldPtr f3 = Field::get(3);
  const auto pg3 = build_pg(3, f3);
  Matrix m(4, 4);
  m(0, 0) = m(1, 1) = m(2, 2) = 1;
  const SemilinearMap planar(FieldHom::identity(f3), m);
  const auto dom = pg3->restrict_to(pg3->all_points() - pg3->points_in(planar.kernel()));
  EXPECT_EQ(code_of([&] {
              reconstruct(restrict_induced(planar, dom, pg3, MorphismKind::kLocallyProjective));
            }),
            ErrorCode::kImageInPlane);
  const SemilinearMap id(FieldHom::identity(f3), Matrix::identity(4));
  const auto ell = make_quadric(f3, QuadricForm::kElliptic);
  EXPECT_EQ(code_of([&] {
              reconstruct(restrict_induced(id, ell, pg3, MorphismKind::kLocallyProjective));
            }),
            ErrorCode::kNoBasePair);
  const auto ag = make_affine(3, f3);
  EXPECT_EQ(code_of([&] {
              reconstruct(restrict_induced(id, ag, pg3, MorphismKind::kLocallyProjective),
                          {100000});
            }),
            ErrorCode::kNoBasePair);
}

TEST(ReconstructLap, Examples) {
  std::mt19937_64 rng(46);
  const FieldPtr f4 = Field::get(4);
  const auto pg4 = build_pg(3, f4);
  const SemilinearMap phi = random_semilinear(rng, f4, f4, 4, 4, 4, 0);
  const auto r = reconstruct_locally_affino(restrict_induced(
      phi, make_quadric(f4, QuadricForm::kElliptic), pg4, MorphismKind::kLocallyAffinoProjective));
  EXPECT_TRUE(proportional(phi, r.phi).has_value());

  const SemilinearMap frob(FieldHom::from_power(f4, f4, 1), random_matrix(rng, *f4, 4, 4, 4));
  const auto rf = reconstruct_locally_affino(restrict_induced(
      frob, make_quadric(f4, QuadricForm::kHyperbolic), pg4, MorphismKind::kLocallyAffinoProjective));
  EXPECT_TRUE(proportional(frob, rf.phi).has_value());
  EXPECT_EQ(rf.certificate.sigma_power, 1);

  const FieldPtr f3 = Field::get(3);
  const auto pg3 = build_pg(3, f3);
  const SemilinearMap c = random_semilinear(rng, f3, f3, 4, 4, 4, 0);
  const auto rc = reconstruct_locally_affino(restrict_induced(
      c, make_quadric(f3, QuadricForm::kCone), pg3, MorphismKind::kLocallyAffinoProjective));
  EXPECT_TRUE(proportional(c, rc.phi).has_value());

  const FieldPtr f2 = Field::get(2);
  const auto pg2 = build_pg(3, f2);
  const SemilinearMap id(FieldHom::identity(f2), Matrix::identity(4));
  EXPECT_EQ(code_of([&] {
              reconstruct(restrict_induced(id, make_quadric(f2, QuadricForm::kHyperbolic), pg2,
                                           MorphismKind::kLocallyAffinoProjective));
            }),
            ErrorCode::kFieldClauseViolated);
}

TEST(ReconstructAffino, SubfieldTarget) {
  std::mt19937_64 rng(47);
  const FieldPtr f3 = Field::get(3), f9 = Field::get(9);
  const auto dst = build_pg(3, f9);
  const SemilinearMap phi = random_semilinear(rng, f3, f9, 4, 4, 4, 0);
  const auto inst =
      restrict_induced(phi, make_affine(3, f3), dst, MorphismKind::kAffinoProjective);
  const auto r = reconstruct(inst);
  EXPECT_TRUE(proportional(phi, r.phi).has_value());
}

TEST(SideConditions, Examples) {
  std::mt19937_64 rng(48);
  const FieldPtr f3 = Field::get(3);
  const auto pg3 = build_pg(3, f3);
  const SemilinearMap phi = random_semilinear(rng, f3, f3, 4, 4, 4, 0);
  const auto inst =
      restrict_induced(phi, make_affine(3, f3), pg3, MorphismKind::kLocallyProjective);
  const auto rep = certify_side_conditions(reconstruct(inst), inst);
  EXPECT_TRUE(rep.injective);
  EXPECT_TRUE(rep.kernel_zero);
  EXPECT_TRUE(rep.holds);

  const auto two = make_two_hyperplanes(pg3);
  const auto inst2 = restrict_induced(phi, two, pg3, MorphismKind::kLocallyProjective);
  const auto rep2 = certify_side_conditions(reconstruct(inst2), inst2);
  EXPECT_TRUE(rep2.embedding);
  EXPECT_TRUE(rep2.extension_embedding_checked);
  EXPECT_TRUE(rep2.extension_is_embedding);

  // PG(4,2) -> PG(3,2) with a one-point kernel inside the removed hyperplane.
  const FieldPtr f2 = Field::get(2);
  const auto pg42 = build_pg(4, f2);
  const auto pg32 = build_pg(3, f2);
  Matrix m(4, 5);
  for (int i = 0; i < 4; ++i) m(i, i) = 1;
  m(0, 4) = 1;  // kernel spanned by (1,0,0,0,1)
  const SemilinearMap proj(FieldHom::identity(f2), m);
  const auto ker = proj.kernel();
  ASSERT_EQ(ker.dim(), 1);
  int h = -1;
  for (int i = 0; i < static_cast<int>(pg42->hyperplanes().size()); ++i) {
    if (ker.is_subspace_of(pg42->hyperplanes()[i])) {
      h = i;
      break;
    }
  }
  const auto x = make_complement(pg42, {pg42->hyperplanes()[h]});
  const auto inst3 = restrict_induced(proj, x, pg32, MorphismKind::kLocallyProjective);
  const auto r3 = reconstruct(inst3);
  EXPECT_TRUE(proportional(proj, r3.phi).has_value());
  const auto rep3 = certify_side_conditions(r3, inst3);
  EXPECT_FALSE(rep3.injective);
  EXPECT_FALSE(rep3.kernel_zero);
  EXPECT_FALSE(rep3.kernel_promised);
  EXPECT_TRUE(rep3.holds);
  EXPECT_FALSE(rep3.notes.empty());
}

TEST(Oracle, Examples) {
  const FieldPtr f2 = Field::get(2);
  const auto pg = build_pg(3, f2);
  const SemilinearMap id(FieldHom::identity(f2), Matrix::identity(4));
  const auto ids = brute_force_oracle(restrict_induced(id, pg, pg, MorphismKind::kFullProjective));
  ASSERT_EQ(ids.size(), 1u);
  EXPECT_EQ(ids[0].matrix(), Matrix::identity(4));

  std::mt19937_64 rng(49);
  const SemilinearMap phi = random_semilinear(rng, f2, f2, 4, 4, 4, 0);
  const auto two = make_two_hyperplanes(pg);
  const auto inst = restrict_induced(phi, two, pg, MorphismKind::kLocallyProjective);
  const auto all = brute_force_oracle(inst);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0], reconstruct(inst).phi);

  MorphismInstance broken = restrict_induced(id, pg, pg, MorphismKind::kFullProjective);
  std::swap(broken.map[3], broken.map[9]);
  EXPECT_TRUE(brute_force_oracle(broken).empty());

  OracleOptions small;
  small.cap = 1000;
  EXPECT_EQ(code_of([&] { brute_force_oracle(inst, small); }), ErrorCode::kCapExceeded);
}

TEST(Kinds, ParseAndPrint) {
  for (auto k : {MorphismKind::kFullProjective, MorphismKind::kLocallyProjective,
                 MorphismKind::kAffinoProjective, MorphismKind::kLocallyAffinoProjective}) {
    EXPECT_EQ(parse_kind(to_string(k)), k);
  }
  EXPECT_THROW(parse_kind("xx"), Error);
}

}  // namespace
}  // namespace fgeom
