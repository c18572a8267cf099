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
// Randomized properties with fixed seeds.

#include <gtest/gtest.h>

#include <random>

#include "fgeom/gallery.hpp"
#include "fgeom/reconstruct.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace fgeom {
namespace {

using testing::random_semilinear;
using testing::random_vector;

LinearSubspace random_subspace(std::mt19937_64& rng, const FieldPtr& f, int n, int gens) {
  std::vector<Vec> v;
  for (int i = 0; i < gens; ++i) v.push_back(random_vector(rng, *f, n));
  return LinearSubspace::span(f, n, v);
}

TEST(Property, SubspaceDimensionFormula) {
  std::mt19937_64 rng(0x5eed01);
  for (int q : {2, 3, 4, 5}) {
    const FieldPtr f = Field::get(q);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = random_subspace(rng, f, 5, 1 + trial % 4);
      const auto b = random_subspace(rng, f, 5, 1 + (trial / 4) % 4);
      EXPECT_EQ(a.dim() + b.dim(), a.join(b).dim() + a.meet(b).dim());
      EXPECT_TRUE(a.meet(b).is_subspace_of(a));
      EXPECT_TRUE(a.is_subspace_of(a.join(b)));
    }
  }
}

TEST(Property, SpanPointsMatchOracle) {
  std::mt19937_64 rng(0x5eed02);
  for (int q : {2, 3, 4}) {
    const FieldPtr f = Field::get(q);
    const testing::NaiveField nf(f->characteristic(), f->degree());
    const auto pg = build_pg(3, f);
    for (int trial = 0; trial < 30; ++trial) {
      std::uniform_int_distribution<int> d(0, pg->size() - 1);
      const int k = 1 + trial % 3;
      PointSet s(pg->size());
      std::vector<testing::IntVec> gens;
      for (int i = 0; i < k; ++i) {
        const int p = d(rng);
        s.set(p);
        gens.emplace_back(pg->coords(p).begin(), pg->coords(p).end());
      }
      std::set<testing::IntVec> lib;
      pg->closure(s).for_each([&](int p) {
        lib.emplace(pg->coords(p).begin(), pg->coords(p).end());
      });
      EXPECT_EQ(lib, testing::span_points(nf, gens));
    }
  }
}

TEST(Property, FtpgRoundTripWithKernels) {
  std::mt19937_64 rng(0x5eed03);
  for (int q : {2, 3, 4}) {
    const FieldPtr f = Field::get(q);
    const auto pg = build_pg(3, f);
    for (int trial = 0; trial < 25; ++trial) {
      const SemilinearMap phi = random_semilinear(rng, f, f, 4, 4, 3, trial);
      const FtpgResult r = reconstruct_ftpg(pg, pg, induced_point_map(phi, *pg, *pg));
      EXPECT_TRUE(proportional(phi, r.phi).has_value());
      EXPECT_EQ(r.exceptional, phi.kernel());
      EXPECT_EQ(r.phi, phi.canonical());
    }
  }
}

TEST(Property, OracleAgreesOnComplements) {
  std::mt19937_64 rng(0x5eed04);
  const FieldPtr f = Field::get(2);
  const auto pg = build_pg(3, f);
  const auto x = make_affine(3, f);
  for (int trial = 0; trial < 3; ++trial) {
    const SemilinearMap phi = random_semilinear(rng, f, f, 4, 4, 4, 0);
    const auto inst = restrict_induced(phi, x, pg, MorphismKind::kLocallyProjective);
    const auto all = brute_force_oracle(inst);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0], reconstruct(inst).phi);
  }
}

// Independent enumeration of v -> ([v] mod v1, [v] mod v2).
TEST(Property, FibredProductEnumeration) {
  std::mt19937_64 rng(0x5eed05);
  for (int q : {2, 3}) {
    const FieldPtr f = Field::get(q);
    const testing::NaiveField nf(q, 1);
    for (int trial = 0; trial < 5; ++trial) {
      Vec v1, v2;
      do {
        v1 = random_vector(rng, *f, 4);
        v2 = random_vector(rng, *f, 4);
      } while (rank(*f, {v1, v2}) < 2);
      const testing::IntVec i1(v1.begin(), v1.end()), i2(v2.begin(), v2.end());
      const testing::FibredCounts counts = testing::fibred_product_counts(nf, i1, i2);
      const std::int64_t image_size = counts.image, product = counts.product;
      const auto rep = verify_fibred_product(f, 4, v1, v2);
      EXPECT_EQ(image_size, q * q * q * q);
      EXPECT_EQ(product, q * q * q * q);
      EXPECT_EQ(rep.product_size, product);
      EXPECT_EQ(rep.image_size, image_size);
      EXPECT_TRUE(rep.bijective);
    }
  }
}

TEST(Property, CanonicalFormIsScaleInvariant) {
  std::mt19937_64 rng(0x5eed06);
  for (int q : {3, 4, 5, 7, 8, 9, 16}) {
    const FieldPtr f = Field::get(q);
    for (int trial = 0; trial < 20; ++trial) {
      const SemilinearMap phi = random_semilinear(rng, f, f, 3, 4, 1, trial);
      const Elem s = static_cast<Elem>(1 + trial % (q - 1));
      EXPECT_EQ(phi.scaled(s).canonical(), phi.canonical());
      EXPECT_EQ(phi.canonical().scaled(f->inv(phi.canonical_scalar())), phi);
    }
  }
}

}  // namespace
}  // namespace fgeom
