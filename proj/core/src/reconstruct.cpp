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

#include "fgeom/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "fgeom/classify.hpp"
#include "fgeom/error.hpp"

namespace fgeom {
namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

Vec unit(int length, int i) {
  Vec v(length, 0);
  v[i] = 1;
  return v;
}

std::uint64_t encode(std::span<const Elem> v, int q) {
  std::uint64_t k = 0;
  for (Elem e : v) k = k * q + e;
  return k;
}

// Linear map K'^cols -> K'^rows given by its action on unit vectors.
template <typename F>
SemilinearMap linear_from(const FieldPtr& field, int cols, F&& image) {
  std::vector<Vec> columns;
  for (int j = 0; j < cols; ++j) columns.push_back(image(unit(cols, j)));
  const int rows = columns.empty() ? 0 : static_cast<int>(columns[0].size());
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j) m.set_column(j, columns[j]);
  return {FieldHom::identity(field), std::move(m)};
}

LinearSubspace span_of_images(const ProjectiveSpace& dst,
                              const std::vector<int>& points) {
  LinearSubspace s(dst.field(), dst.ambient_dim() + 1);
  for (int p : points) {
    if (p >= 0) s.insert(dst.coords(p));
  }
  return s;
}

void check_map_shape(const MorphismInstance& phi) {
  if (!phi.domain || !phi.target) fail(ErrorCode::kInvalidArgument, "missing geometry");
  if (static_cast<int>(phi.map.size()) != phi.domain->size()) {
    fail(ErrorCode::kInvalidArgument, "map size differs from the domain");
  }
  for (int v : phi.map) {
    if (v < 0 || v >= phi.target->size()) {
      fail(ErrorCode::kInvalidArgument, "map value outside the target");
    }
  }
}

}  // namespace

std::string_view to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::kFullProjective: return "pg";
    case MorphismKind::kLocallyProjective: return "lp";
    case MorphismKind::kAffinoProjective: return "ap";
    case MorphismKind::kLocallyAffinoProjective: return "lap";
  }
  return "?";
}

MorphismKind parse_kind(std::string_view name) {
  for (auto k : {MorphismKind::kFullProjective, MorphismKind::kLocallyProjective,
                 MorphismKind::kAffinoProjective,
                 MorphismKind::kLocallyAffinoProjective}) {
    if (to_string(k) == name) return k;
  }
  fail(ErrorCode::kInvalidArgument, "unknown kind '" + std::string(name) + "'");
}

MorphismInstance restrict_induced(const SemilinearMap& phi,
                                  const EmbeddedPtr& domain,
                                  const SpacePtr& target, MorphismKind kind) {
  MorphismInstance out{domain, target, std::vector<int>(domain->size()), kind};
  for (int x = 0; x < domain->size(); ++x) {
    const auto p = apply_semilinear(phi, *target, domain->coords(x));
    if (!p) fail(ErrorCode::kVerificationFailed, "domain meets the kernel");
    out.map[x] = *p;
  }
  return out;
}

// ---------------------------------------------------------------------------

FtpgResult reconstruct_ftpg(const SpacePtr& src, const SpacePtr& dst,
                            std::span<const int> map,
                            const FtpgOptions& options) {
  const Field& k = src->f();
  const Field& kp = dst->f();
  const int n1 = src->ambient_dim() + 1;
  const int m1 = dst->ambient_dim() + 1;
  if (static_cast<int>(map.size()) != src->size()) {
    fail(ErrorCode::kInvalidArgument, "map must cover every source point");
  }
  std::vector<std::string> log;

  // (i) exceptional flat and constancy on its classes
  PointSet undefined(src->size());
  LinearSubspace e(src->field(), n1);
  for (int p = 0; p < src->size(); ++p) {
    if (map[p] >= dst->size()) fail(ErrorCode::kInvalidArgument, "map value outside the target");
    if (map[p] < 0) {
      undefined.set(p);
      e.insert(src->coords(p));
    }
  }
  if (src->points_in(e) != undefined) {
    fail(ErrorCode::kExceptionalNotFlat, "undefined points do not form a flat");
  }
  std::unordered_map<std::uint64_t, int> class_value;
  LinearSubspace image(dst->field(), m1);
  for (int p = 0; p < src->size(); ++p) {
    if (map[p] < 0) continue;
    const Vec c = normalized(k, e.quotient_coords(src->coords(p)));
    auto [it, fresh] = class_value.emplace(encode(c, k.order()), map[p]);
    if (!fresh && it->second != map[p]) {
      fail(ErrorCode::kVerificationFailed,
           "map not constant on the class of point " + std::to_string(p));
    }
    image.insert(dst->coords(map[p]));
  }
  if (image.dim() < 3) fail(ErrorCode::kImageInLine, "image is contained in a line");
  log.push_back("exceptional flat of dimension " + std::to_string(e.dim() - 1));

  // (ii)-(iii) canonical frame of the echelon complement
  const std::vector<int> free = e.free_columns();
  const int d1 = static_cast<int>(free.size());
  std::vector<int> order = options.frame_order;
  if (order.empty()) {
    order.resize(d1);
    std::iota(order.begin(), order.end(), 0);
  } else {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(d1);
    std::iota(expect.begin(), expect.end(), 0);
    if (sorted != expect) fail(ErrorCode::kInvalidArgument, "frame order is not a permutation");
  }
  std::vector<Vec> basis;
  Vec u(n1, 0);
  for (int i = 0; i < d1; ++i) {
    basis.push_back(unit(n1, free[order[i]]));
    u[free[order[i]]] = 1;
  }
  auto image_of = [&](const Vec& v) -> const Vec& {
    return dst->coords(map[src->point_of(v)]);
  };

  // (iv) independence of the frame images
  std::vector<Vec> w;
  for (const Vec& v : basis) w.push_back(image_of(v));
  if (rank(kp, w) != d1) {
    fail(ErrorCode::kInternalContradiction, "frame images are dependent");
  }

  // (v) rescale through the unit point
  Matrix wm(m1, d1);
  for (int i = 0; i < d1; ++i) wm.set_column(i, w[i]);
  const auto a = solve(kp, wm, image_of(u));
  if (!a || std::count(a->begin(), a->end(), Elem{0}) > 0) {
    fail(ErrorCode::kInternalContradiction, "unit point image not in general position");
  }
  std::vector<Vec> vpp;
  for (int i = 0; i < d1; ++i) vpp.push_back(scaled(kp, (*a)[i], w[i]));
  log.push_back("frame of " + std::to_string(d1) + " points normalized by the unit point");

  // (vi) sigma from <v0 + lambda v1>
  Matrix pair(m1, 2);
  pair.set_column(0, vpp[0]);
  pair.set_column(1, vpp[1]);
  std::vector<Elem> table(k.order(), 0);
  for (int l = 1; l < k.order(); ++l) {
    const Vec z = added(k, basis[0], scaled(k, static_cast<Elem>(l), basis[1]));
    const auto ab = solve(kp, pair, image_of(z));
    if (!ab || (*ab)[0] == 0) {
      fail(ErrorCode::kVerificationFailed,
           "image of <v0 + lambda v1> leaves the image line");
    }
    table[l] = kp.div((*ab)[1], (*ab)[0]);
  }
  // (vii)
  const FieldHom sigma = FieldHom::from_table(src->field(), dst->field(), table);
  const auto homs = list_homomorphisms(src->field(), dst->field());
  if (std::find(homs.begin(), homs.end(), sigma) == homs.end()) {
    fail(ErrorCode::kSigmaNotHomomorphism, "extracted field map is not a homomorphism");
  }
  log.push_back("sigma = frobenius^" + std::to_string(sigma.frobenius_power()));

  // (viii) M = B * sigma(Q), Q the projection along E
  const Matrix q = quotient_linear_map(src->field(), n1, e).matrix();
  Matrix b(m1, d1);
  for (int i = 0; i < d1; ++i) b.set_column(order[i], vpp[i]);
  SemilinearMap phi(sigma, mat_mul(kp, b, apply_hom(sigma, q)));
  for (int p = 0; p < src->size(); ++p) {
    const auto got = apply_semilinear(phi, *dst, src->coords(p));
    if (got.value_or(-1) != map[p]) {
      fail(ErrorCode::kVerificationFailed,
           "reconstructed map disagrees at point " + std::to_string(p));
    }
  }
  log.push_back("verified on " + std::to_string(src->size()) + " points");
  return {phi.canonical(), std::move(e), std::move(log)};
}

FtpgResult reconstruct_ftpg(const PartialMorphism& psi,
                            const FtpgOptions& options) {
  auto src = std::dynamic_pointer_cast<const ProjectiveSpace>(psi.source);
  auto dst = std::dynamic_pointer_cast<const ProjectiveSpace>(psi.target);
  if (!src || !dst) {
    fail(ErrorCode::kInvalidArgument, "source and target must be projective spaces");
  }
  return reconstruct_ftpg(src, dst, psi.map, options);
}

// ---------------------------------------------------------------------------

InducedQuotient induced_quotient_map(const MorphismInstance& phi, int x0) {
  check_map_shape(phi);
  const EmbeddedGeometry& x = *phi.domain;
  if (x0 < 0 || x0 >= x.size()) fail(ErrorCode::kInvalidArgument, "base point outside X");
  const ProjectiveSpace& dst = *phi.target;
  InducedQuotient out;
  out.source = ProjectiveSpace::get(x.ambient_dim() - 1, x.field());
  out.target = ProjectiveSpace::get(dst.ambient_dim() - 1, dst.field());
  out.source_w = LinearSubspace::span(x.field(), x.ambient_dim() + 1, {x.coords(x0)});
  const int t0 = phi.map[x0];
  out.target_w = LinearSubspace::span(dst.field(), dst.ambient_dim() + 1, {dst.coords(t0)});
  std::vector<int> seen(out.source->size(), -2);
  for (int y = 0; y < x.size(); ++y) {
    if (y == x0) continue;
    const int c = out.source->point_of(out.source_w.quotient_coords(x.coords(y)));
    const int t = phi.map[y];
    const int value =
        t == t0 ? -1
                : out.target->point_of(out.target_w.quotient_coords(dst.coords(t)));
    if (seen[c] == -2) {
      seen[c] = value;
    } else if (seen[c] != value) {
      fail(ErrorCode::kVerificationFailed,
           "map not constant on the class of point " + std::to_string(y));
    }
  }
  out.covered = PointSet(out.source->size());
  out.exceptional = PointSet(out.source->size());
  out.map.assign(out.source->size(), -1);
  for (int c = 0; c < out.source->size(); ++c) {
    if (seen[c] == -2) continue;
    out.covered.set(c);
    if (seen[c] == -1) out.exceptional.set(c);
    out.map[c] = seen[c];
  }
  out.image_spans_plane = span_of_images(*out.target, out.map).dim() >= 3;
  return out;
}

SemilinearMap normalize_pair(const SemilinearMap& lift1,
                             const SemilinearMap& lift2,
                             const LinearSubspace& target_w12) {
  const SemilinearMap r =
      quotient_linear_map(lift1.target_field(), lift1.target_coords(), target_w12);
  const SemilinearMap r1 = lift1.then(r);
  const SemilinearMap r2 = lift2.then(r);
  if (r1.is_zero() || r2.is_zero()) {
    fail(ErrorCode::kNotProportional, "a reduction vanishes");
  }
  if (!(r1.sigma() == r2.sigma())) {
    fail(ErrorCode::kNotProportional, "reductions have different field maps");
  }
  const auto lambda = proportional(r1, r2);
  if (!lambda) fail(ErrorCode::kNotProportional, "reductions are not proportional");
  return lift1.scaled(*lambda);
}

SemilinearMap glue_fibred_product(const SemilinearMap& lift1,
                                  const SemilinearMap& lift2,
                                  std::span<const Elem> v1p,
                                  std::span<const Elem> v2p) {
  const FieldPtr& fp = lift1.target_field();
  const Field& kp = *fp;
  const int m1 = lift1.target_coords();
  const LinearSubspace w12 =
      LinearSubspace::span(fp, m1, {Vec(v1p.begin(), v1p.end()), Vec(v2p.begin(), v2p.end())});
  if (w12.dim() != 2) fail(ErrorCode::kInvalidArgument, "base images must be distinct points");
  const SemilinearMap r = quotient_linear_map(fp, m1, w12);
  if (!(lift1.sigma() == lift2.sigma()) || !(lift1.then(r) == lift2.then(r))) {
    fail(ErrorCode::kReductionsDisagree, "reductions modulo <v1', v2'> differ");
  }
  Matrix pair(m1, 2);
  pair.set_column(0, v1p);
  pair.set_column(1, v2p);
  Matrix m(m1, lift1.source_coords());
  for (int j = 0; j < m.cols(); ++j) {
    const Vec c1 = lift1.matrix().column(j);
    const Vec c2 = lift2.matrix().column(j);
    // c = c1 + alpha v1' must satisfy c - c2 in <v2'>.
    const auto ab = solve(kp, pair, axpy_sub(kp, c2, 1, c1));
    if (!ab) fail(ErrorCode::kLiftInconsistent, "no common lift for column " + std::to_string(j));
    m.set_column(j, added(kp, c1, scaled(kp, (*ab)[0], v1p)));
  }
  SemilinearMap phi(lift1.sigma(), std::move(m));
  // ker Phi = ker lift1 n ker lift2, the kernel correspondence of the
  // fibred product.
  if (!(phi.kernel() == lift1.kernel().meet(lift2.kernel()))) {
    fail(ErrorCode::kLiftInconsistent, "kernel relation fails");
  }
  return phi;
}

FibredProductReport verify_fibred_product(const FieldPtr& field, int dim,
                                          std::span<const Elem> v1,
                                          std::span<const Elem> v2) {
  const Field& k = *field;
  const int q = k.order();
  const Vec a(v1.begin(), v1.end());
  const Vec b(v2.begin(), v2.end());
  const auto w1 = LinearSubspace::span(field, dim, {a});
  const auto w2 = LinearSubspace::span(field, dim, {b});
  const auto w12 = LinearSubspace::span(field, dim, {a, b});
  if (w1.dim() != 1 || w2.dim() != 1 || w12.dim() != 2) {
    fail(ErrorCode::kInvalidArgument, "need two independent vectors");
  }
  auto decode = [&](std::uint64_t code, int len) {
    Vec v(len);
    for (int i = len - 1; i >= 0; --i) {
      v[i] = static_cast<Elem>(code % q);
      code /= q;
    }
    return v;
  };
  auto count = [&](int len) {
    std::uint64_t c = 1;
    for (int i = 0; i < len; ++i) c *= q;
    return c;
  };
  FibredProductReport rep;
  // Fibred product size: pairs over each class of V/<v1,v2>.
  std::unordered_map<std::uint64_t, std::int64_t> over1, over2;
  for (std::uint64_t c = 0; c < count(dim - 1); ++c) {
    const Vec x = decode(c, dim - 1);
    ++over1[encode(w12.quotient_coords(w1.lift(x)), q)];
    ++over2[encode(w12.quotient_coords(w2.lift(x)), q)];
  }
  for (const auto& [key, n] : over1) {
    auto it = over2.find(key);
    if (it != over2.end()) rep.product_size += n * it->second;
  }
  std::unordered_set<std::uint64_t> image;
  bool inside = true;
  for (std::uint64_t c = 0; c < count(dim); ++c) {
    const Vec v = decode(c, dim);
    const Vec p1 = w1.quotient_coords(v);
    const Vec p2 = w2.quotient_coords(v);
    inside = inside && w12.quotient_coords(w1.lift(p1)) == w12.quotient_coords(w2.lift(p2));
    image.insert(encode(p1, q) * count(dim - 1) + encode(p2, q));
    ++rep.domain_size;
  }
  rep.image_size = static_cast<std::int64_t>(image.size());
  rep.injective = rep.image_size == rep.domain_size;
  rep.bijective = inside && rep.injective && rep.image_size == rep.product_size;
  return rep;
}

// ---------------------------------------------------------------------------

bool field_clause_holds(const Field& k, const Field& kp) {
  return k.order() >= 4 || (k.order() == 3 && kp.characteristic() == 3);
}

namespace {

// X/x == P/x: every ambient line through x meets X again.
bool quotient_is_full(const EmbeddedGeometry& x, const PointSet& in, int point) {
  const SpacePtr pg = x.ambient();
  for (int l : pg->lines_through(x.ambient_index(point))) {
    if ((pg->lines()[l] & in).count() < 2) return false;
  }
  return true;
}

// X/x affino-projective in P/x: the tangent lines at x lie in a hyperplane.
bool quotient_is_affino(const EmbeddedGeometry& x, const PointSet& in, int point) {
  const SpacePtr pg = x.ambient();
  LinearSubspace s(pg->field(), pg->ambient_dim() + 1);
  s.insert(x.coords(point));
  for (int l : pg->lines_through(x.ambient_index(point))) {
    const PointSet& line = pg->lines()[l];
    if ((line & in).count() < 2) {
      line.for_each([&](int p) { s.insert(pg->coords(p)); });
    }
  }
  return s.dim() <= pg->ambient_dim();
}

std::vector<int> pick_base_pair(const MorphismInstance& phi,
                                const std::vector<char>& admissible, int rank) {
  const int n = phi.domain->size();
  int seen = 0;
  for (int a = 0; a < n; ++a) {
    if (!admissible[a]) continue;
    for (int b = a + 1; b < n; ++b) {
      if (!admissible[b] || phi.map[a] == phi.map[b]) continue;
      if (seen++ == rank) return {a, b};
    }
  }
  fail(ErrorCode::kNoBasePair, "no admissible base pair of rank " + std::to_string(rank));
}

void verify_on_domain(const SemilinearMap& phi, const MorphismInstance& inst,
                      std::vector<std::string>& log) {
  for (int x = 0; x < inst.domain->size(); ++x) {
    const auto got = apply_semilinear(phi, *inst.target, inst.domain->coords(x));
    if (!got || *got != inst.map[x]) {
      log.push_back("verification failed at point " + std::to_string(x));
      fail(ErrorCode::kVerificationFailed,
           "reconstructed map disagrees at point " + std::to_string(x));
    }
  }
  log.push_back("verified on all " + std::to_string(inst.domain->size()) + " points of X");
}

ReconstructionResult finish(const SemilinearMap& raw, const MorphismInstance& inst,
                            std::vector<int> base, std::vector<std::string> log) {
  verify_on_domain(raw, inst, log);
  ReconstructionResult r{raw.canonical(), raw.kernel(), std::move(base), {}};
  r.certificate.transcript = std::move(log);
  r.certificate.verified_points = inst.domain->size();
  r.certificate.sigma_power = raw.sigma().frobenius_power();
  r.certificate.scalar_normalization = raw.canonical_scalar();
  return r;
}

void check_hypotheses(const MorphismInstance& phi) {
  check_map_shape(phi);
  const EmbeddedGeometry& x = *phi.domain;
  if (x.dimension() < 2) fail(ErrorCode::kNotEnoughPoints, "dimension of X below 2");
  const PredicateResult ep = has_enough_points(x, false);
  if (!ep.is_true()) fail(ErrorCode::kNotEnoughPoints, "X does not have enough points");
  if (span_of_images(*phi.target, phi.map).dim() < 4) {
    fail(ErrorCode::kImageInPlane, "image is contained in a plane");
  }
}

ReconstructionResult pipeline(const MorphismInstance& phi,
                              const ReconstructOptions& options, bool affino) {
  check_map_shape(phi);
  const EmbeddedGeometry& x = *phi.domain;
  const ProjectiveSpace& dst = *phi.target;
  if (affino && !field_clause_holds(x.f(), dst.f())) {
    fail(ErrorCode::kFieldClauseViolated,
         "needs |K| >= 4 or |K| = 3 = char K'");
  }
  check_hypotheses(phi);
  const PointSet in = x.to_ambient(x.all_points());
  std::vector<char> admissible(x.size());
  for (int p = 0; p < x.size(); ++p) {
    admissible[p] = affino ? quotient_is_affino(x, in, p) : quotient_is_full(x, in, p);
  }
  const std::vector<int> base = pick_base_pair(phi, admissible, options.base_pair_rank);
  std::vector<std::string> log;
  log.push_back("base points " + std::to_string(base[0]) + ", " + std::to_string(base[1]));

  const int n1 = x.ambient_dim() + 1;
  const int m1 = dst.ambient_dim() + 1;
  std::vector<SemilinearMap> lifts;
  for (int b : base) {
    const InducedQuotient iq = induced_quotient_map(phi, b);
    if (!iq.image_spans_plane) {
      fail(ErrorCode::kInternalContradiction, "quotient image contained in a line");
    }
    std::vector<int> full = iq.map;
    if (affino) {
      full = extend_affino(iq.source, iq.target, iq.covered, iq.map).map;
    } else if (iq.covered.count() != iq.source->size()) {
      fail(ErrorCode::kInternalContradiction, "X/x differs from P/x at a base point");
    }
    const FtpgResult f = reconstruct_ftpg(iq.source, iq.target, full);
    log.push_back("quotient at " + std::to_string(b) + ": " + f.transcript.back());
    const SemilinearMap lift_back = linear_from(
        dst.field(), m1 - 1, [&](const Vec& c) { return iq.target_w.lift(c); });
    lifts.push_back(quotient_linear_map(x.field(), n1, iq.source_w)
                        .then(f.phi)
                        .then(lift_back));
  }
  const Vec& v1p = dst.coords(phi.map[base[0]]);
  const Vec& v2p = dst.coords(phi.map[base[1]]);
  const auto w12 = LinearSubspace::span(dst.field(), m1, {v1p, v2p});
  const SemilinearMap first = normalize_pair(lifts[0], lifts[1], w12);
  log.push_back("quotient maps normalized");
  const SemilinearMap glued = glue_fibred_product(first, lifts[1], v1p, v2p);
  log.push_back("glued through the fibred product");
  return finish(glued, phi, base, std::move(log));
}

}  // namespace

ReconstructionResult reconstruct_locally_projective(
    const MorphismInstance& phi, const ReconstructOptions& options) {
  return pipeline(phi, options, false);
}

ReconstructionResult reconstruct_locally_affino(
    const MorphismInstance& phi, const ReconstructOptions& options) {
  return pipeline(phi, options, true);
}

ReconstructionResult reconstruct_affino(const MorphismInstance& phi) {
  check_map_shape(phi);
  if (span_of_images(*phi.target, phi.map).dim() < 3) {
    fail(ErrorCode::kImageInLine, "image is contained in a line");
  }
  const AffinoExtension ext = extend_affino(phi);
  const FtpgResult f = reconstruct_ftpg(phi.domain->ambient(), phi.target, ext.map);
  std::vector<std::string> log = {"extended across hyperplane " +
                                  std::to_string(ext.hyperplane)};
  log.insert(log.end(), f.transcript.begin(), f.transcript.end());
  return finish(f.phi, phi, {}, std::move(log));
}

ReconstructionResult reconstruct(const MorphismInstance& phi,
                                 const ReconstructOptions& options) {
  switch (phi.kind) {
    case MorphismKind::kFullProjective: {
      check_map_shape(phi);
      const SpacePtr pg = phi.domain->ambient();
      std::vector<int> full(pg->size(), -1);
      for (int x = 0; x < phi.domain->size(); ++x) {
        full[phi.domain->ambient_index(x)] = phi.map[x];
      }
      FtpgResult f = reconstruct_ftpg(pg, phi.target, full);
      return finish(f.phi, phi, {}, std::move(f.transcript));
    }
    case MorphismKind::kLocallyProjective:
      return reconstruct_locally_projective(phi, options);
    case MorphismKind::kAffinoProjective:
      return reconstruct_affino(phi);
    case MorphismKind::kLocallyAffinoProjective:
      return reconstruct_locally_affino(phi, options);
  }
  fail(ErrorCode::kInvalidArgument, "unknown kind");
}

// ---------------------------------------------------------------------------

SideConditionReport certify_side_conditions(const ReconstructionResult& r,
                                            const MorphismInstance& phi,
                                            const CheckOptions& options) {
  check_map_shape(phi);
  SideConditionReport rep;
  const EmbeddedGeometry& x = *phi.domain;
  const ProjectiveSpace& dst = *phi.target;
  const SpacePtr pg = x.ambient();

  std::vector<int> preimage(dst.size(), -1);
  rep.injective = true;
  PointSet image(dst.size());
  for (int p = 0; p < x.size(); ++p) {
    if (preimage[phi.map[p]] >= 0) rep.injective = false;
    preimage[phi.map[p]] = p;
    image.set(phi.map[p]);
  }
  if (rep.injective) {
    const EmbeddedPtr sub = dst.restrict_to(image);
    std::vector<int> inverse(sub->size());
    for (int t = 0; t < sub->size(); ++t) inverse[t] = preimage[sub->ambient_index(t)];
    rep.embedding = check_morphism(*sub, x, inverse, options).is_morphism;
  }

  bool hypothesis = true;
  if (phi.kind == MorphismKind::kAffinoProjective ||
      phi.kind == MorphismKind::kLocallyAffinoProjective) {
    // No p outside X with (p v x) n X = {x} for every x in X.
    const PointSet in = x.to_ambient(x.all_points());
    const PointSet outside = pg->all_points() - in;
    outside.for_each([&](int p) {
      if (rep.tangent_point) return;
      bool tangent_everywhere = true;
      in.for_each([&](int a) {
        if (tangent_everywhere &&
            (pg->lines()[pg->line_through(p, a)] & in).count() != 1) {
          tangent_everywhere = false;
        }
      });
      if (tangent_everywhere) rep.tangent_point = p;
    });
    if (rep.tangent_point) {
      hypothesis = false;
      rep.notes.push_back("tangent point " + std::to_string(*rep.tangent_point) +
                          " found; trivial kernel not promised");
    }
  }
  rep.kernel_zero = r.exceptional.dim() == 0;
  rep.kernel_promised = hypothesis && rep.injective;
  if (!rep.injective) {
    rep.notes.push_back("map not injective; a trivial kernel is not promised");
  }
  if (rep.kernel_promised && !rep.kernel_zero) {
    rep.holds = false;
    rep.notes.push_back("injective map but nonzero kernel");
  }
  if (rep.embedding && rep.kernel_promised && rep.kernel_zero) {
    rep.extension_embedding_checked = true;
    const std::vector<int> full = induced_point_map(r.phi, *pg, dst);
    PointSet ext_image(dst.size());
    std::vector<int> ext_pre(dst.size(), -1);
    bool injective = true;
    for (int p = 0; p < pg->size(); ++p) {
      if (full[p] < 0 || ext_pre[full[p]] >= 0) {
        injective = false;
        break;
      }
      ext_pre[full[p]] = p;
      ext_image.set(full[p]);
    }
    if (injective) {
      const EmbeddedPtr sub = dst.restrict_to(ext_image);
      std::vector<int> inverse(sub->size());
      for (int t = 0; t < sub->size(); ++t) inverse[t] = ext_pre[sub->ambient_index(t)];
      rep.extension_is_embedding = check_morphism(*sub, *pg, inverse, options).is_morphism;
    }
    if (!rep.extension_is_embedding) {
      rep.holds = false;
      rep.notes.push_back("embedding whose extension is not an embedding");
    }
  }
  return rep;
}

}  // namespace fgeom
