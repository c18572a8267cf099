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

#include "fgeom/classify.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "fgeom/error.hpp"
#include "fgeom/projective.hpp"

namespace fgeom {
namespace {

// Non-owning handle for APIs that keep a parent pointer during a call.
GeometryPtr borrow(const Geometry& g) { return GeometryPtr(GeometryPtr(), &g); }

PredicateResult named(std::string name) {
  PredicateResult r;
  r.name = std::move(name);
  return r;
}

Witness points_witness(std::string kind, const PointSet& s,
                       bool ambient = false) {
  return {std::move(kind), s.elements(), {}, ambient};
}

AxiomVerdict named_verdict(std::string name) {
  AxiomVerdict v;
  v.name = std::move(name);
  return v;
}

bool plane_has_quadrilateral(const Geometry& g, const PointSet& plane) {
  const std::vector<int> p = plane.elements();
  const int n = static_cast<int>(p.size());
  auto collinear = [&](int a, int b, int c) {
    return g.rank(PointSet(g.size(), {a, b, c})) <= 2;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        if (collinear(p[i], p[j], p[k])) continue;
        for (int l = k + 1; l < n; ++l) {
          if (collinear(p[i], p[j], p[l]) || collinear(p[i], p[k], p[l]) ||
              collinear(p[j], p[k], p[l])) {
            continue;
          }
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

PredicateResult has_enough_points(const Geometry& x, bool cross_check) {
  if (x.dimension() < 2) {
    throw Error(ErrorCode::kDimensionTooLow,
                "enough points needs dimension >= 2");
  }
  PredicateResult r = named("enough_points");
  const auto planes = x.flats_of_dim(2);
  bool plane_route = true;
  std::int64_t good = 0;
  for (const PointSet& p : planes) {
    if (plane_has_quadrilateral(x, p)) {
      ++good;
    } else if (plane_route) {
      plane_route = false;
      r.witnesses.push_back(points_witness("plane_without_quadrilateral", p));
    }
  }
  bool quotient_route = true;
  for (int p = 0; p < x.size() && cross_check && quotient_route; ++p) {
    QuotientGeometry q(borrow(x), PointSet(x.size(), {p}));
    for (const PointSet& line : q.flats_of_dim(1)) {
      if (line.count() < 3) {
        quotient_route = false;
        break;
      }
    }
  }
  r.verdict = plane_route;
  r.counts["planes"] = static_cast<std::int64_t>(planes.size());
  r.counts["planes_with_quadrilateral"] = good;
  if (cross_check) r.counts["routes_agree"] = plane_route == quotient_route;
  return r;
}

PredicateResult is_locally_projective(const Geometry& x) {
  PredicateResult r = named("locally_projective");
  const auto& flats = x.flats();
  std::unordered_map<PointSet, int, PointSetHash> rank_of;
  for (const PointSet& f : flats) rank_of.emplace(f, x.rank(f));
  auto rank = [&](const PointSet& s) {
    auto it = rank_of.find(s);
    return it != rank_of.end() ? it->second : x.rank(s);
  };
  bool all = true;
  std::int64_t disagreements = 0;
  for (int p = 0; p < x.size(); ++p) {
    QuotientGeometry q(borrow(x), PointSet(x.size(), {p}));
    const AxiomReport pr = check_projective_axioms(q);
    const bool quotient_ok = pr.holds("P1") && pr.holds("P2") && pr.holds("P3");

    std::vector<const PointSet*> through;
    for (const PointSet& f : flats) {
      if (f.test(p)) through.push_back(&f);
    }
    bool formula_ok = true;
    Witness s1, s2;
    for (std::size_t i = 0; i < through.size() && formula_ok; ++i) {
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        const PointSet& a = *through[i];
        const PointSet& b = *through[j];
        if (rank(a) + rank(b) != rank(x.closure(a | b)) + rank(a & b)) {
          formula_ok = false;
          s1 = points_witness("S1", a);
          s2 = points_witness("S2", b);
          break;
        }
      }
    }
    if (quotient_ok != formula_ok) ++disagreements;
    if (!quotient_ok && all) {
      all = false;
      r.witnesses.push_back({"point", {p}, {}, false});
      if (!formula_ok) {
        r.witnesses.push_back(s1);
        r.witnesses.push_back(s2);
      }
      for (const auto& v : pr.verdicts) {
        if (!v.holds && (v.name == "P1" || v.name == "P2" || v.name == "P3")) {
          r.note = "quotient at point " + std::to_string(p) + " fails " + v.name;
          break;
        }
      }
    }
  }
  r.verdict = all;
  r.counts["points_checked"] = x.size();
  r.counts["route_disagreements"] = disagreements;
  return r;
}

PredicateResult check_line_condition(const EmbeddedGeometry& x) {
  PredicateResult r = named("line_condition");
  SpacePtr pg = x.ambient();
  const PointSet in = x.to_ambient(x.all_points());
  std::int64_t bad = 0;
  for (const PointSet& line : pg->lines()) {
    const PointSet meet = line & in;
    if (meet.count() == 1) {
      if (bad == 0) {
        r.witnesses.push_back(points_witness("tangent_line", line, true));
        r.witnesses.push_back(points_witness("single_point", meet, true));
      }
      ++bad;
    }
  }
  r.verdict = bad == 0;
  r.counts["ambient_lines"] = static_cast<std::int64_t>(pg->lines().size());
  r.counts["violations"] = bad;
  return r;
}

// ---------------------------------------------------------------------------

AxiomReport check_lp_axioms(const Geometry& x, const CheckOptions& options) {
  AxiomReport report;
  const int n = x.size();
  const auto lines = x.flats_of_dim(1);
  const auto planes = x.flats_of_dim(2);
  std::vector<int> line_of(static_cast<std::size_t>(n) * n, -1);
  std::vector<int> pair_count(static_cast<std::size_t>(n) * n, 0);
  for (std::size_t l = 0; l < lines.size(); ++l) {
    const auto pts = lines[l].elements();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (i == j) continue;
        const std::size_t k = static_cast<std::size_t>(pts[i]) * n + pts[j];
        line_of[k] = static_cast<int>(l);
        ++pair_count[k];
      }
    }
  }
  auto collinear = [&](int a, int b, int c) {
    const int l = line_of[static_cast<std::size_t>(a) * n + b];
    return l >= 0 && lines[l].test(c);
  };

  AxiomVerdict lp1 = named_verdict("LP1");
  for (const PointSet& l : lines) {
    if (l.count() < 2) {
      lp1.holds = false;
      lp1.witnesses.push_back(points_witness("short_line", l));
      break;
    }
  }
  for (int a = 0; a < n && lp1.holds; ++a) {
    for (int b = a + 1; b < n; ++b) {
      ++lp1.checked;
      if (pair_count[static_cast<std::size_t>(a) * n + b] != 1) {
        lp1.holds = false;
        lp1.witnesses.push_back({"pair", {a, b}, {}, false});
        break;
      }
    }
  }
  report.verdicts.push_back(lp1);

  AxiomVerdict lp2 = named_verdict("LP2");
  {
    std::unordered_map<std::uint64_t, int> triple_count;
    auto key = [&](int a, int b, int c) {
      return (static_cast<std::uint64_t>(a) * n + b) * n + c;
    };
    for (const PointSet& p : planes) {
      const auto pts = p.elements();
      bool spanning = false;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
          for (std::size_t k = j + 1; k < pts.size(); ++k) {
            if (!lp1.holds || !collinear(pts[i], pts[j], pts[k])) {
              ++triple_count[key(pts[i], pts[j], pts[k])];
              spanning = true;
            }
          }
        }
      }
      if (!spanning && lp2.holds) {
        lp2.holds = false;
        lp2.witnesses.push_back(points_witness("degenerate_plane", p));
      }
    }
    for (int a = 0; a < n && lp2.holds && lp1.holds; ++a) {
      for (int b = a + 1; b < n && lp2.holds; ++b) {
        for (int c = b + 1; c < n; ++c) {
          if (collinear(a, b, c)) continue;
          ++lp2.checked;
          auto it = triple_count.find(key(a, b, c));
          if (it == triple_count.end() || it->second != 1) {
            lp2.holds = false;
            lp2.witnesses.push_back({"triple", {a, b, c}, {}, false});
            break;
          }
        }
      }
    }
    if (!lp1.holds) lp2.note = "triple coverage skipped: LP1 fails";
  }
  report.verdicts.push_back(lp2);

  AxiomVerdict lp3 = named_verdict("LP3");
  std::vector<std::vector<int>> lines_in(planes.size());
  for (std::size_t p = 0; p < planes.size(); ++p) {
    for (std::size_t l = 0; l < lines.size(); ++l) {
      if (lines[l].is_subset_of(planes[p])) lines_in[p].push_back(static_cast<int>(l));
    }
    const auto pts = planes[p].elements();
    for (std::size_t i = 0; i < pts.size() && lp3.holds; ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        ++lp3.checked;
        const int l = line_of[static_cast<std::size_t>(pts[i]) * n + pts[j]];
        if (l < 0 || !lines[l].is_subset_of(planes[p])) {
          lp3.holds = false;
          lp3.witnesses.push_back(points_witness("plane", planes[p]));
          lp3.witnesses.push_back({"pair", {pts[i], pts[j]}, {}, false});
          break;
        }
      }
    }
  }
  report.verdicts.push_back(lp3);

  AxiomVerdict lp4 = named_verdict("LP4");
  {
    std::unordered_set<PointSet, PointSetHash> line_set(lines.begin(), lines.end());
    std::unordered_map<std::uint64_t, PointSet> joins;
    auto join = [&](int l, int p) -> const PointSet& {
      const std::uint64_t k = static_cast<std::uint64_t>(l) * n + p;
      auto it = joins.find(k);
      if (it != joins.end()) return it->second;
      PointSet s = lines[l];
      s.set(p);
      return joins.emplace(k, x.closure(s)).first->second;
    };
    std::uint64_t total = 0;
    for (std::size_t p = 0; p < planes.size(); ++p) {
      const std::uint64_t m = lines_in[p].size();
      total += m * (m - (m > 0)) / 2 * (n - planes[p].count());
    }
    auto config = [&](std::size_t p, int l1, int l2, int pt) {
      ++lp4.checked;
      const PointSet meet = join(l1, pt) & join(l2, pt);
      if (line_set.count(meet)) return true;
      lp4.holds = false;
      lp4.witnesses.push_back(points_witness("plane", planes[p]));
      lp4.witnesses.push_back(points_witness("L1", lines[l1]));
      lp4.witnesses.push_back(points_witness("L2", lines[l2]));
      lp4.witnesses.push_back({"x", {pt}, {}, false});
      return false;
    };
    if (total <= options.limit) {
      for (std::size_t p = 0; p < planes.size() && lp4.holds; ++p) {
        const auto outside = (x.all_points() - planes[p]).elements();
        const auto& ls = lines_in[p];
        for (std::size_t i = 0; i < ls.size() && lp4.holds; ++i) {
          for (std::size_t j = i + 1; j < ls.size() && lp4.holds; ++j) {
            for (int pt : outside) {
              if (!config(p, ls[i], ls[j], pt)) break;
            }
          }
        }
      }
    } else {
      lp4.sampled = true;
      lp4.seed = options.seed;
      std::mt19937_64 rng(options.seed);
      const std::uint64_t samples = std::min<std::uint64_t>(options.limit, 200000);
      std::uniform_int_distribution<std::size_t> pick_plane(0, planes.size() - 1);
      std::uniform_int_distribution<int> pick_point(0, n - 1);
      for (std::uint64_t s = 0; s < samples && lp4.holds; ++s) {
        const std::size_t p = pick_plane(rng);
        const auto& ls = lines_in[p];
        if (ls.size() < 2) continue;
        std::uniform_int_distribution<std::size_t> pick_line(0, ls.size() - 1);
        const std::size_t i = pick_line(rng);
        const std::size_t j = pick_line(rng);
        const int pt = pick_point(rng);
        if (i == j || planes[p].test(pt)) continue;
        config(p, ls[i], ls[j], pt);
      }
    }
  }
  report.verdicts.push_back(lp4);

  if (x.dimension() == 3) {
    AxiomVerdict lp4p = named_verdict("LP4'");
    std::unordered_set<PointSet, PointSetHash> line_set(lines.begin(), lines.end());
    for (std::size_t i = 0; i < planes.size() && lp4p.holds; ++i) {
      for (std::size_t j = i + 1; j < planes.size(); ++j) {
        ++lp4p.checked;
        const PointSet meet = planes[i] & planes[j];
        if (!meet.empty() && !line_set.count(meet)) {
          lp4p.holds = false;
          lp4p.witnesses.push_back(points_witness("P1", planes[i]));
          lp4p.witnesses.push_back(points_witness("P2", planes[j]));
          break;
        }
      }
    }
    report.verdicts.push_back(lp4p);
    AxiomVerdict lp5 = named_verdict("LP5");
    lp5.holds = x.rank(x.all_points()) >= 4;
    report.verdicts.push_back(lp5);
  }
  return report;
}

// ---------------------------------------------------------------------------

PredicateResult check_bundle_theorem(const Geometry& x,
                                     const BundleOptions& options) {
  PredicateResult r = named("bundle_theorem");
  if (x.dimension() < 3) {
    r.note = "not applicable: dimension < 3";
    return r;
  }
  const auto lines = x.flats_of_dim(1);
  const std::size_t m = lines.size();
  const auto* emb = dynamic_cast<const EmbeddedGeometry*>(&x);
  std::vector<char> coplanar(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      coplanar[i * m + j] = coplanar[j * m + i] = x.rank(lines[i] | lines[j]) <= 3;
    }
  }
  auto cop = [&](std::size_t i, std::size_t j) { return coplanar[i * m + j] != 0; };
  auto triple_coplanar = [&](std::size_t i, std::size_t j, std::size_t k) {
    return cop(i, j) && cop(i, k) && cop(j, k) &&
           x.rank(lines[i] | lines[j] | lines[k]) <= 3;
  };
  std::int64_t applicable = 0, certified = 0, concurrent = 0, violations = 0;
  auto examine = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    const std::size_t t[4] = {a, b, c, d};
    int non = 0;
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) non += !cop(t[i], t[j]);
    }
    if (non > 1) return;
    if (triple_coplanar(a, b, c) || triple_coplanar(a, b, d) ||
        triple_coplanar(a, c, d) || triple_coplanar(b, c, d)) {
      return;
    }
    ++applicable;
    if (non == 1) {
      if (violations == 0) {
        for (std::size_t l : t) r.witnesses.push_back(points_witness("line", lines[l]));
      }
      ++violations;
      return;
    }
    ++certified;
    bool meet;
    if (emb != nullptr) {
      LinearSubspace s = emb->span_of(lines[a]);
      for (int i = 1; i < 4; ++i) s = s.meet(emb->span_of(lines[t[i]]));
      meet = s.dim() > 0;
    } else {
      meet = (lines[a] & lines[b] & lines[c] & lines[d]).count() > 0;
    }
    concurrent += meet;
  };
  const double m4 = static_cast<double>(m) * m * m * m;
  if (m4 <= static_cast<double>(options.limit)) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a + 1; b < m; ++b) {
        const int nab = !cop(a, b);
        for (std::size_t c = b + 1; c < m; ++c) {
          const int nabc = nab + !cop(a, c) + !cop(b, c);
          if (nabc > 1) continue;
          for (std::size_t d = c + 1; d < m; ++d) examine(a, b, c, d);
        }
      }
    }
  } else {
    r.sampled = true;
    r.seed = options.seed;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      std::size_t t[4];
      for (auto& v : t) v = pick(rng);
      std::sort(t, t + 4);
      if (t[0] == t[1] || t[1] == t[2] || t[2] == t[3]) continue;
      examine(t[0], t[1], t[2], t[3]);
    }
  }
  r.verdict = violations == 0;
  r.counts["lines"] = static_cast<std::int64_t>(m);
  r.counts["applicable_tuples"] = applicable;
  r.counts["certified_bundles"] = certified;
  r.counts["concurrent_bundles"] = concurrent;
  r.counts["violations"] = violations;
  return r;
}

// ---------------------------------------------------------------------------

namespace {

Witness hyperplane_witness(std::string kind, const ProjectiveSpace& pg, int h) {
  Witness w{std::move(kind), {}, pg.hyperplanes()[h].basis(), true};
  w.vectors.insert(w.vectors.begin(), pg.hyperplane_forms()[h]);
  return w;
}

// First hyperplane (canonical order) containing every point of `need`,
// or -1.
int first_hyperplane_containing(const ProjectiveSpace& pg,
                                const PointSet& need, int* count = nullptr) {
  int first = -1;
  int total = 0;
  const auto& forms = pg.hyperplane_forms();
  const Field& f = pg.f();
  for (std::size_t h = 0; h < forms.size(); ++h) {
    bool ok = true;
    need.for_each([&](int p) {
      if (!ok) return;
      Elem s = 0;
      const Vec& v = pg.coords(p);
      for (std::size_t j = 0; j < v.size(); ++j) s = f.add(s, f.mul(forms[h][j], v[j]));
      ok = s == 0;
    });
    if (ok) {
      if (first < 0) first = static_cast<int>(h);
      ++total;
      if (count == nullptr) break;
    }
  }
  if (count != nullptr) *count = total;
  return first;
}

}  // namespace

AffinoResult find_affino_hyperplane(const EmbeddedGeometry& x) {
  SpacePtr pg = x.ambient();
  const PointSet missing = pg->all_points() - x.to_ambient(x.all_points());
  AffinoResult out;
  const int h = first_hyperplane_containing(*pg, missing, &out.certificates);
  if (h >= 0) out.hyperplane = h;
  return out;
}

PredicateResult is_affino_projective(const EmbeddedGeometry& x) {
  PredicateResult r = named("affino_projective");
  SpacePtr pg = x.ambient();
  const AffinoResult a = find_affino_hyperplane(x);
  r.verdict = a.hyperplane.has_value();
  r.counts["certificates"] = a.certificates;
  if (a.hyperplane) {
    r.certificates.push_back(hyperplane_witness("hyperplane", *pg, *a.hyperplane));
  } else {
    const PointSet missing = pg->all_points() - x.to_ambient(x.all_points());
    r.witnesses.push_back(points_witness("missing_points", missing, true));
  }
  return r;
}

PredicateResult is_locally_affino_projective(const EmbeddedGeometry& x) {
  PredicateResult r = named("locally_affino_projective");
  SpacePtr pg = x.ambient();
  const int n = pg->ambient_dim();
  const PointSet in = x.to_ambient(x.all_points());
  SpacePtr quotient_space = ProjectiveSpace::get(n - 1, pg->field());
  bool all = true;
  std::int64_t disagreements = 0;
  for (int p = 0; p < x.size(); ++p) {
    const int a = x.ambient_index(p);
    // Route 1: lines through x meeting X only in x must span a hyperplane.
    PointSet tangent(pg->size());
    tangent.set(a);
    for (int l : pg->lines_through(a)) {
      if ((pg->lines()[l] & in).count() == 1) tangent |= pg->lines()[l];
    }
    const int hx = first_hyperplane_containing(*pg, tangent);
    const bool line_route = hx >= 0;
    // Route 2: X/x inside P/x, coordinatized by the complement of <x>.
    LinearSubspace w(pg->field(), n + 1);
    w.insert(x.coords(p));
    PointSet covered(quotient_space->size());
    in.for_each([&](int y) {
      if (y != a) covered.set(quotient_space->point_of(w.quotient_coords(pg->coords(y))));
    });
    const bool quotient_route =
        first_hyperplane_containing(*quotient_space,
                                    quotient_space->all_points() - covered) >= 0;
    if (line_route != quotient_route) ++disagreements;
    if (line_route) {
      r.certificates.push_back(hyperplane_witness("H_x", *pg, hx));
      r.certificates.back().points = {p};
    } else if (all) {
      all = false;
      r.witnesses.push_back({"point", {p}, {}, false});
      r.witnesses.push_back(points_witness("tangent_union", tangent, true));
    }
  }
  r.verdict = all;
  r.counts["route_disagreements"] = disagreements;
  return r;
}

PredicateResult is_mobius(const EmbeddedGeometry& x) {
  PredicateResult r = named("mobius");
  if (x.size() <= 2) {
    r.note = "not applicable: at most two points";
    return r;
  }
  SpacePtr pg = x.ambient();
  if (pg->ambient_dim() < 3) {
    r.note = "not applicable: ambient dimension < 3";
    return r;
  }
  const PointSet in = x.to_ambient(x.all_points());
  bool all = true;
  for (int p = 0; p < x.size() && all; ++p) {
    const int a = x.ambient_index(p);
    PointSet tangent(pg->size());
    for (int l : pg->lines_through(a)) {
      if ((pg->lines()[l] & in).count() == 1) tangent |= pg->lines()[l];
    }
    const LinearSubspace span = pg->span_of(tangent);
    if (span.dim() == pg->ambient_dim() && pg->points_in(span) == tangent) {
      const int h = first_hyperplane_containing(*pg, tangent);
      r.certificates.push_back(hyperplane_witness("tangent_hyperplane", *pg, h));
      r.certificates.back().points = {p};
    } else {
      all = false;
      r.witnesses.push_back({"point", {p}, {}, false});
      r.witnesses.push_back(points_witness("tangent_union", tangent, true));
    }
  }
  r.verdict = all;
  return r;
}

PredicateResult is_ovoid(const EmbeddedGeometry& x) {
  PredicateResult m = is_mobius(x);
  PredicateResult r = named("ovoid");
  if (!m.verdict) {
    r.note = m.note;
    return r;
  }
  if (!*m.verdict) {
    r.verdict = false;
    r.witnesses = m.witnesses;
    r.note = "not a Mobius geometry";
    return r;
  }
  SpacePtr pg = x.ambient();
  const PointSet in = x.to_ambient(x.all_points());
  r.verdict = true;
  for (const PointSet& line : pg->lines()) {
    if ((line & in).count() > 2) {
      r.verdict = false;
      r.witnesses.push_back(points_witness("secant_line", line, true));
      break;
    }
  }
  return r;
}

PredicateResult check_minimal_embedding(const EmbeddedGeometry& x) {
  PredicateResult r = named("minimal_embedding");
  SpacePtr pg = x.ambient();
  const PointSet in = x.to_ambient(x.all_points());
  r.verdict = true;
  for (int p = 0; p < x.size() && *r.verdict; ++p) {
    for (int l : pg->lines_through(x.ambient_index(p))) {
      if ((pg->lines()[l] & in).count() == 1) {
        r.verdict = false;
        r.witnesses.push_back({"point", {p}, {}, false});
        r.witnesses.push_back(points_witness("tangent_line", pg->lines()[l], true));
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

const PredicateResult* ClassificationReport::find(std::string_view name) const {
  for (const auto& p : predicates) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

const std::vector<std::string>& predicate_names() {
  static const std::vector<std::string> names = {
      "enough_points",   "locally_projective", "line_condition",
      "lp_axioms",       "bundle_theorem",     "affino_projective",
      "locally_affino_projective", "mobius",  "ovoid",
      "minimal_embedding"};
  return names;
}

ClassificationReport classify(const EmbeddedGeometry& x,
                              const ClassifyOptions& options) {
  std::vector<std::string> selected = options.predicates;
  if (selected.empty()) selected = predicate_names();
  for (const auto& s : selected) {
    const auto& all = predicate_names();
    if (std::find(all.begin(), all.end(), s) == all.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown predicate '" + s + "'");
    }
  }
  ClassificationReport report;
  for (const auto& name : predicate_names()) {
    if (std::find(selected.begin(), selected.end(), name) == selected.end()) {
      continue;
    }
    PredicateResult r;
    if (name == "enough_points") {
      try {
        r = has_enough_points(x);
      } catch (const Error& e) {
        r = named(name);
        r.note = std::string("not applicable: ") + e.what();
      }
    } else if (name == "locally_projective") {
      r = is_locally_projective(x);
    } else if (name == "line_condition") {
      r = check_line_condition(x);
    } else if (name == "lp_axioms") {
      const AxiomReport lp = check_lp_axioms(x);
      r = named(name);
      r.verdict = lp.all_hold();
      for (const auto& v : lp.verdicts) {
        r.counts[v.name] = v.holds;
        if (!v.holds && r.witnesses.empty()) {
          r.witnesses = v.witnesses;
          r.note = v.name + " fails";
        }
        if (v.sampled) {
          r.sampled = true;
          r.seed = v.seed;
        }
      }
    } else if (name == "bundle_theorem") {
      r = check_bundle_theorem(x, options.bundle);
    } else if (name == "affino_projective") {
      r = is_affino_projective(x);
    } else if (name == "locally_affino_projective") {
      r = is_locally_affino_projective(x);
    } else if (name == "mobius") {
      r = is_mobius(x);
    } else if (name == "ovoid") {
      r = is_ovoid(x);
    } else if (name == "minimal_embedding") {
      r = check_minimal_embedding(x);
    }
    report.predicates.push_back(std::move(r));
  }
  auto verdict = [&](std::string_view n) -> std::optional<bool> {
    const PredicateResult* p = report.find(n);
    return p ? p->verdict : std::nullopt;
  };
  auto implies = [&](std::string label, std::string_view a, std::string_view b) {
    const auto va = verdict(a);
    const auto vb = verdict(b);
    if (va && vb) report.coherence.emplace_back(std::move(label), !*va || *vb);
  };
  implies("line_condition_implies_locally_projective", "line_condition",
          "locally_projective");
  implies("ovoid_implies_mobius", "ovoid", "mobius");
  implies("mobius_implies_locally_affino_projective", "mobius",
          "locally_affino_projective");
  implies("affino_projective_implies_locally_affino_projective",
          "affino_projective", "locally_affino_projective");
  for (const char* n : {"locally_projective", "locally_affino_projective"}) {
    if (const PredicateResult* p = report.find(n)) {
      report.coherence.emplace_back(std::string(n) + "_routes_agree",
                                    p->counts.at("route_disagreements") == 0);
    }
  }
  const PredicateResult* lp = report.find("locally_projective");
  if (const PredicateResult* p = report.find("enough_points")) {
    if (p->verdict && lp != nullptr && lp->is_true()) {
      report.coherence.emplace_back("enough_points_routes_agree",
                                    p->counts.at("routes_agree") == 1);
    }
  }
  return report;
}

}  // namespace fgeom
