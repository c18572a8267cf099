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
#include <benchmark/benchmark.h>

#include <random>

#include "fgeom/classify.hpp"
#include "fgeom/gallery.hpp"
#include "fgeom/reconstruct.hpp"

namespace fgeom {
namespace {

SemilinearMap random_map(std::mt19937_64& rng, const FieldPtr& f, int min_rank) {
  std::uniform_int_distribution<int> d(0, f->order() - 1);
  for (;;) {
    Matrix m(4, 4);
    std::vector<Vec> rows;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) m(r, c) = static_cast<Elem>(d(rng));
      rows.push_back(m.row(r));
    }
    if (rank(*f, rows) >= min_rank) return SemilinearMap(FieldHom::identity(f), m);
  }
}

void BM_FieldMul(benchmark::State& state) {
  const FieldPtr f = Field::get(static_cast<int>(state.range(0)));
  Elem acc = 1;
  for (auto _ : state) {
    for (int a = 1; a < f->order(); ++a) acc = f->mul(acc, static_cast<Elem>(a)) | 1;
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(4)->Arg(9)->Arg(16);

void BM_Closure(benchmark::State& state) {
  const auto pg = build_pg(3, Field::get(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(0, pg->size() - 1);
  for (auto _ : state) {
    const PointSet s(pg->size(), {d(rng), d(rng), d(rng)});
    benchmark::DoNotOptimize(pg->closure(s).count());
  }
}
BENCHMARK(BM_Closure)->Arg(2)->Arg(4)->Arg(9);

void BM_ProjectiveAxioms(benchmark::State& state) {
  const auto pg = build_pg(3, Field::get(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_projective_axioms(*pg).all_hold());
}
BENCHMARK(BM_ProjectiveAxioms)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Ftpg(benchmark::State& state) {
  const FieldPtr f = Field::get(static_cast<int>(state.range(0)));
  const auto pg = build_pg(3, f);
  std::mt19937_64 rng(1);
  const auto map = induced_point_map(random_map(rng, f, 4), *pg, *pg);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct_ftpg(pg, pg, map).phi.is_zero());
}
BENCHMARK(BM_Ftpg)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_ReconstructAffine(benchmark::State& state) {
  const FieldPtr f = Field::get(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(2);
  const auto inst = restrict_induced(random_map(rng, f, 4), make_affine(3, f), build_pg(3, f),
                                     MorphismKind::kLocallyProjective);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(inst).base_points.size());
}
BENCHMARK(BM_ReconstructAffine)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ReconstructQuadric(benchmark::State& state) {
  const FieldPtr f = Field::get(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(3);
  const auto inst = restrict_induced(random_map(rng, f, 4), make_quadric(f, QuadricForm::kElliptic),
                                     build_pg(3, f), MorphismKind::kLocallyAffinoProjective);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(inst).base_points.size());
}
BENCHMARK(BM_ReconstructQuadric)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClassifyQuadric(benchmark::State& state) {
  const auto x = make_quadric(Field::get(static_cast<int>(state.range(0))), QuadricForm::kElliptic);
  for (auto _ : state) benchmark::DoNotOptimize(classify(*x).coherence.size());
}
BENCHMARK(BM_ClassifyQuadric)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
  const FieldPtr f = Field::get(2);
  const auto pg = build_pg(3, f);
  std::mt19937_64 rng(4);
  const auto inst = restrict_induced(random_map(rng, f, 4), pg, pg, MorphismKind::kFullProjective);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(inst).size());
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace fgeom

BENCHMARK_MAIN();
