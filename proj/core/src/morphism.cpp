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

#include "fgeom/morphism.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_set>

#include "fgeom/error.hpp"

namespace fgeom {
namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PointSet image_of(const Geometry& target, std::span<const int> map,
                  const PointSet& a) {
  PointSet out(target.size());
  a.for_each([&](int x) { out.set(map[x]); });
  return out;
}

PointSet preimage_of(int source_size, std::span<const int> map,
                     const PointSet& s) {
  PointSet out(source_size);
  for (int x = 0; x < source_size; ++x) {
    if (map[x] >= 0 && s.test(map[x])) out.set(x);
  }
  return out;
}

// Closed sets of the target restricted to the image. Preimages of target
// flats are exactly the preimages of these, so condition (a) only needs
// them.
std::vector<PointSet> image_flats(const Geometry& target,
                                  const PointSet& image) {
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<PointSet> order{target.closure(target.no_points()) & image};
  seen.insert(order.front());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const PointSet f = order[i];
    (image - f).for_each([&](int x) {
      PointSet g = f;
      g.set(x);
      g = target.closure(g) & image;
      if (seen.insert(g).second) order.push_back(std::move(g));
    });
  }
  return order;
}

// Calls visit on each k-subset in lexicographic order until it returns false.
bool for_each_subset(int n, int k,
                     const std::function<bool(std::span<const int>)>& visit) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return true;
  while (true) {
    if (!visit(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

MorphismVerdict check_morphism(const Geometry& source, const Geometry& target,
                               std::span<const int> map,
                               const CheckOptions& options) {
  if (static_cast<int>(map.size()) != source.size()) {
    throw Error(ErrorCode::kInvalidArgument, "map size differs from source");
  }
  for (int y : map) {
    if (y < 0 || y >= target.size()) {
      throw Error(ErrorCode::kInvalidArgument, "map value out of range");
    }
  }
  MorphismVerdict v;
  const int n = source.size();

  const PointSet image = image_of(target, map, source.all_points());
  for (const PointSet& s : image_flats(target, image)) {
    const PointSet pre = preimage_of(n, map, s);
    const PointSet c = source.closure(pre);
    if (c != pre) {
      v.condition_a = false;
      v.witnesses.push_back({"target_flat", s.elements(), {}, false});
      v.witnesses.push_back({"preimage_closure_excess",
                             {(c - pre).first()}, {}, false});
      break;
    }
  }

  auto check_subset = [&](std::span<const int> a) {
    ++v.subsets_checked;
    PointSet as(n, a);
    const PointSet ca = source.closure(as);
    const PointSet cimg = target.closure(image_of(target, map, as));
    int bad = -1;
    ca.for_each([&](int x) {
      if (bad < 0 && !cimg.test(map[x])) bad = x;
    });
    if (bad < 0) return true;
    v.condition_c = false;
    v.witnesses.push_back({"subset", {a.begin(), a.end()}, {}, false});
    v.witnesses.push_back({"closure_point_escapes", {bad}, {}, false});
    if (a.size() == 2) {
      v.witnesses.push_back({"collinear_triple", {bad, a[0], a[1]}, {}, false});
    }
    return false;
  };

  bool done = false;
  for (int k = 0; k <= std::min(2, n) && !done; ++k) {
    done = !for_each_subset(n, k, check_subset);
  }
  if (!done) {
    const std::uint64_t big = binomial(n, 3) + binomial(n, 4);
    if (big <= options.limit) {
      for (int k = 3; k <= std::min(4, n) && !done; ++k) {
        done = !for_each_subset(n, k, check_subset);
      }
    } else {
      v.sampled = true;
      v.seed = options.seed;
      std::mt19937_64 rng(options.seed);
      std::uniform_int_distribution<int> pick(0, n - 1);
      const std::uint64_t samples = std::min<std::uint64_t>(options.limit, 100000);
      for (std::uint64_t s = 0; s < samples && !done; ++s) {
        const int k = 3 + static_cast<int>(rng() & 1);
        std::vector<int> a;
        while (static_cast<int>(a.size()) < k) {
          const int x = pick(rng);
          if (std::find(a.begin(), a.end(), x) == a.end()) a.push_back(x);
        }
        std::sort(a.begin(), a.end());
        done = !check_subset(a);
      }
    }
  }
  v.condition_c_complete =
      !v.sampled && (n <= 4 || source.rank(source.all_points()) <= 4);
  if (v.condition_a && !v.condition_c) v.internal_disagreement = true;
  if (!v.condition_a && v.condition_c && v.condition_c_complete) {
    v.internal_disagreement = true;
  }
  v.is_morphism = v.condition_a && v.condition_c;
  return v;
}

MorphismVerdict check_morphism(const GeometryMorphism& phi,
                               const CheckOptions& options) {
  return check_morphism(*phi.source, *phi.target, phi.map, options);
}

MorphismVerdict check_partial_morphism(const PartialMorphism& phi,
                                       const CheckOptions& options) {
  const Geometry& src = *phi.source;
  MorphismVerdict bad;
  bad.is_morphism = false;
  if (!src.is_flat(phi.exceptional)) {
    bad.witnesses.push_back(
        {"exceptional_not_flat", phi.exceptional.elements(), {}, false});
    return bad;
  }
  for (int x = 0; x < src.size(); ++x) {
    if ((phi.map[x] < 0) != phi.exceptional.test(x)) {
      bad.witnesses.push_back({"domain_mismatch", {x}, {}, false});
      return bad;
    }
  }
  for (int x = 0; x < src.size(); ++x) {
    if (phi.map[x] < 0) continue;
    PointSet ex = phi.exceptional;
    ex.set(x);
    const PointSet cx = src.closure(ex);
    int clash = -1;
    (cx - phi.exceptional).for_each([&](int y) {
      if (clash >= 0 || phi.map[y] == phi.map[x]) return;
      PointSet ey = phi.exceptional;
      ey.set(y);
      if (src.closure(ey) == cx) clash = y;
    });
    if (clash >= 0) {
      bad.witnesses.push_back({"not_constant_on_class", {x, clash}, {}, false});
      return bad;
    }
  }
  const PointSet domain = src.all_points() - phi.exceptional;
  SubGeometry restricted(phi.source, domain);
  std::vector<int> local(restricted.size());
  for (int i = 0; i < restricted.size(); ++i) {
    local[i] = phi.map[restricted.parent_index(i)];
  }
  MorphismVerdict v = check_morphism(restricted, *phi.target, local, options);
  // Report witnesses in source indices.
  for (auto& w : v.witnesses) {
    if (w.kind == "target_flat") continue;
    for (int& p : w.points) p = restricted.parent_index(p);
  }
  return v;
}

Quotient quotient(const GeometryPtr& g, const PointSet& e) {
  auto qg = std::make_shared<const QuotientGeometry>(g, e);
  PartialMorphism pi{g, qg, e, std::vector<int>(g->size(), -1)};
  for (int x = 0; x < g->size(); ++x) pi.map[x] = qg->class_of(x);
  return {qg, std::move(pi)};
}

GeometryMorphism factor_through_quotient(const PartialMorphism& phi) {
  const Geometry& src = *phi.source;
  for (const PointSet& line : src.flats_of_dim(1)) {
    if (line.count() < 3) {
      throw Error(ErrorCode::kPreconditionLinesTooShort,
                  "source has a line with fewer than 3 points");
    }
  }
  if (!src.is_flat(phi.exceptional)) {
    throw Error(ErrorCode::kInvalidArgument, "exceptional set is not a flat");
  }
  Quotient q = quotient(phi.source, phi.exceptional);
  std::vector<int> map(q.geometry->size(), -1);
  for (int x = 0; x < src.size(); ++x) {
    const int c = q.geometry->class_of(x);
    if (c < 0) continue;
    if (phi.map[x] < 0) {
      throw Error(ErrorCode::kNotConstantOnClasses,
                  "undefined at a point outside the exceptional flat");
    }
    if (map[c] >= 0 && map[c] != phi.map[x]) {
      throw Error(ErrorCode::kNotConstantOnClasses,
                  "point " + std::to_string(x) + " disagrees with its class");
    }
    map[c] = phi.map[x];
  }
  return {q.geometry, phi.target, std::move(map)};
}

DimBoundsReport check_dim_bounds(const GeometryMorphism& phi) {
  DimBoundsReport r;
  r.source_dim = phi.source->dimension();
  r.target_dim = phi.target->dimension();
  std::vector<int> inverse(phi.target->size(), -1);
  bool injective = true;
  for (int x = 0; x < phi.source->size(); ++x) {
    int& slot = inverse[phi.map[x]];
    if (slot >= 0) injective = false;
    slot = x;
  }
  r.surjective = std::all_of(inverse.begin(), inverse.end(),
                             [](int x) { return x >= 0; });
  r.bijective = r.surjective && injective;
  r.dims_ok = !r.surjective || r.source_dim >= r.target_dim;
  if (r.bijective) {
    r.is_isomorphism =
        check_morphism(*phi.target, *phi.source, inverse).is_morphism;
  }
  if (r.surjective && r.source_dim == r.target_dim && !r.is_isomorphism) {
    r.dims_ok = false;
    r.note = "surjective with equal dimension but not an isomorphism";
  } else if (r.bijective && !r.is_isomorphism) {
    r.note = "bijective morphism, not an isomorphism";
  } else if (r.is_isomorphism) {
    r.note = "isomorphism";
  } else if (r.surjective) {
    r.note = "surjective; dimension drops by " +
             std::to_string(r.source_dim - r.target_dim);
  } else {
    r.note = "not surjective; bounds not applicable";
  }
  return r;
}

}  // namespace fgeom
