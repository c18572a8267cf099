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

#include "fgeom/geometry.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "fgeom/embedded.hpp"
#include "fgeom/error.hpp"

namespace fgeom {

bool AxiomReport::all_hold() const {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const AxiomVerdict& v) { return v.holds; });
}

const AxiomVerdict& AxiomReport::at(std::string_view name) const {
  for (const auto& v : verdicts) {
    if (v.name == name) return v;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "no verdict named " + std::string(name));
}

PointSet Geometry::closure_of(std::initializer_list<int> points) const {
  return closure(PointSet(size_, points));
}

int Geometry::rank(const PointSet& s) const {
  int r = 0;
  PointSet current = closure(no_points());
  s.for_each([&](int x) {
    if (!current.test(x)) {
      current.set(x);
      current = closure(current);
      ++r;
    }
  });
  return r;
}

PointSet Geometry::join(const PointSet& a, const PointSet& b) const {
  return closure(a | b);
}

std::vector<PointSet> Geometry::enumerate_flats() const {
  // Breadth-first over covers. Every x outside F is tried, not just one per
  // cover, so closed sets are all reached even when exchange fails.
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<PointSet> order;
  PointSet bottom = closure(no_points());
  seen.insert(bottom);
  order.push_back(bottom);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const PointSet f = order[i];
    f.complement().for_each([&](int x) {
      PointSet g = f;
      g.set(x);
      g = closure(g);
      if (seen.insert(g).second) order.push_back(std::move(g));
    });
  }
  return order;
}

const std::vector<PointSet>& Geometry::flats() const {
  std::call_once(flats_once_, [this] {
    std::vector<PointSet> all = enumerate_flats();
    std::vector<std::pair<int, PointSet>> keyed;
    keyed.reserve(all.size());
    for (auto& f : all) keyed.emplace_back(rank(f), std::move(f));
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
      if (a.first != b.first) return a.first < b.first;
      return a.second < b.second;
    });
    for (auto& [r, f] : keyed) {
      flat_ranks_.push_back(r);
      flats_.push_back(std::move(f));
    }
  });
  return flats_;
}

std::vector<PointSet> Geometry::flats_of_dim(int d) const {
  const auto& all = flats();
  std::vector<PointSet> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (flat_ranks_[i] == d + 1) out.push_back(all[i]);
  }
  return out;
}

std::vector<int> basis_of(const Geometry& g, const PointSet& s,
                          std::span<const int> generators) {
  PointSet gen(g.size(), generators);
  if (g.closure(gen) != s) {
    throw Error(ErrorCode::kNotGenerating,
                "generators do not span the given flat");
  }
  std::vector<int> basis;
  PointSet current = g.closure(g.no_points());
  for (int x : generators) {
    if (current.test(x)) continue;
    basis.push_back(x);
    current.set(x);
    current = g.closure(current);
  }
  return basis;
}

bool is_independent(const Geometry& g, std::span<const int> points) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    PointSet others(g.size());
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (j != i) others.set(points[j]);
    }
    if (g.closure(others).test(points[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

TableGeometry::TableGeometry(int size, std::vector<PointSet> closed_sets)
    : Geometry(size), table_(std::move(closed_sets)) {
  for (const auto& s : table_) {
    if (s.universe() != size) {
      throw Error(ErrorCode::kInvalidArgument,
                  "closed set over a different point universe");
    }
  }
}

PointSet TableGeometry::closure(const PointSet& a) const {
  PointSet c = all_points();
  for (const auto& s : table_) {
    if (a.is_subset_of(s)) c &= s;
  }
  return c;
}

std::vector<PointSet> TableGeometry::enumerate_flats() const {
  std::unordered_set<PointSet, PointSetHash> seen(table_.begin(), table_.end());
  seen.insert(all_points());
  return {seen.begin(), seen.end()};
}

// ---------------------------------------------------------------------------

SubGeometry::SubGeometry(GeometryPtr parent, const PointSet& subset)
    : Geometry(subset.count()),
      parent_(std::move(parent)),
      to_parent_(subset.elements()),
      to_local_(parent_->size(), -1) {
  for (std::size_t i = 0; i < to_parent_.size(); ++i) {
    to_local_[to_parent_[i]] = static_cast<int>(i);
  }
}

PointSet SubGeometry::to_parent(const PointSet& local) const {
  PointSet out(parent_->size());
  local.for_each([&](int x) { out.set(to_parent_[x]); });
  return out;
}

PointSet SubGeometry::to_local(const PointSet& parent_set) const {
  PointSet out(size());
  parent_set.for_each([&](int x) {
    if (to_local_[x] >= 0) out.set(to_local_[x]);
  });
  return out;
}

PointSet SubGeometry::closure(const PointSet& a) const {
  return to_local(parent_->closure(to_parent(a)));
}

// ---------------------------------------------------------------------------

namespace {

int count_classes(const Geometry& parent, const PointSet& e,
                  std::vector<int>* class_of, std::vector<PointSet>* members) {
  class_of->assign(parent.size(), -1);
  int n = 0;
  (parent.all_points() - e).for_each([&](int x) {
    if ((*class_of)[x] >= 0) return;
    PointSet ex = e;
    ex.set(x);
    const PointSet cx = parent.closure(ex);
    PointSet cls(parent.size());
    (cx - e).for_each([&](int y) {
      if ((*class_of)[y] >= 0) return;
      PointSet ey = e;
      ey.set(y);
      if (y == x || parent.closure(ey) == cx) {
        (*class_of)[y] = n;
        cls.set(y);
      }
    });
    members->push_back(std::move(cls));
    ++n;
  });
  return n;
}

}  // namespace

QuotientGeometry::QuotientGeometry(GeometryPtr parent,
                                   const PointSet& exceptional)
    : Geometry([&] {
        std::vector<int> c;
        std::vector<PointSet> m;
        return count_classes(*parent, exceptional, &c, &m);
      }()),
      parent_(std::move(parent)),
      exceptional_(exceptional) {
  if (!parent_->is_flat(exceptional_)) {
    throw Error(ErrorCode::kInvalidArgument,
                "quotient by a set that is not a flat");
  }
  count_classes(*parent_, exceptional_, &class_of_, &members_);
  exceptional_rank_ = parent_->rank(exceptional_);
}

PointSet QuotientGeometry::lift(const PointSet& classes) const {
  PointSet out = exceptional_;
  classes.for_each([&](int c) { out |= members_[c]; });
  return out;
}

PointSet QuotientGeometry::project(const PointSet& parent_set) const {
  PointSet out(size());
  parent_set.for_each([&](int x) {
    if (class_of_[x] >= 0) out.set(class_of_[x]);
  });
  return out;
}

PointSet QuotientGeometry::closure(const PointSet& classes) const {
  return project(parent_->closure(lift(classes)));
}

int QuotientGeometry::rank(const PointSet& classes) const {
  return parent_->rank(lift(classes)) - exceptional_rank_;
}

// ---------------------------------------------------------------------------

TruncatedGeometry::TruncatedGeometry(GeometryPtr parent, int level)
    : Geometry(parent->size()), parent_(std::move(parent)), level_(level) {}

PointSet TruncatedGeometry::closure(const PointSet& a) const {
  PointSet c = parent_->closure(a);
  if (parent_->rank(c) <= level_) return c;
  return all_points();
}

GeometryPtr subgeometry(const GeometryPtr& g, const PointSet& subset) {
  if (auto e = std::dynamic_pointer_cast<const EmbeddedGeometry>(g)) {
    return e->restrict_to(subset);
  }
  return std::make_shared<SubGeometry>(g, subset);
}

// ---------------------------------------------------------------------------

namespace {

// Smallest superset of `seed` containing the closure of every `arity` of its
// points.
PointSet rule_closure(const Geometry& g, PointSet seed, int arity) {
  std::vector<int> members;
  std::vector<int> queue = seed.elements();
  PointSet in(g.size());
  auto add = [&](const PointSet& s) {
    s.for_each([&](int y) {
      if (!seed.test(y)) {
        seed.set(y);
        queue.push_back(y);
      }
    });
  };
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int y = queue[qi];
    if (in.test(y)) continue;
    add(g.closure_of({y}));
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int z = members[i];
      if (arity == 2) {
        add(g.closure_of({y, z}));
      } else {
        add(g.closure_of({y, z}));
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          add(g.closure_of({y, z, members[j]}));
        }
      }
    }
    members.push_back(y);
    in.set(y);
  }
  return seed;
}

constexpr int kExhaustivePoints = 24;

}  // namespace

GenerationResult check_generated_by(const Geometry& g, int arity,
                                    const CheckOptions& options) {
  if (arity != 2 && arity != 3) {
    throw Error(ErrorCode::kInvalidArgument, "arity must be 2 or 3");
  }
  GenerationResult result;
  bool exhausted = false;
  if (g.size() <= kExhaustivePoints) {
    std::unordered_set<PointSet, PointSetHash> seen;
    std::vector<PointSet> order{rule_closure(g, g.no_points(), arity)};
    seen.insert(order.front());
    for (std::size_t i = 0; i < order.size(); ++i) {
      const PointSet r = order[i];
      ++result.examined;
      if (!g.is_flat(r)) {
        result.holds = false;
        result.witness = r.elements();
        return result;
      }
      if (order.size() > options.limit) {
        exhausted = true;
        break;
      }
      r.complement().for_each([&](int x) {
        PointSet s = r;
        s.set(x);
        s = rule_closure(g, s, arity);
        if (seen.insert(s).second) order.push_back(std::move(s));
      });
    }
    if (!exhausted) return result;
  }
  // Seeded sampling: rule-closures of random small seeds.
  result.sampled = true;
  result.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  const std::uint64_t samples = std::min<std::uint64_t>(options.limit, 2000);
  std::uniform_int_distribution<int> pick(0, std::max(0, g.size() - 1));
  std::uniform_int_distribution<int> width(1, std::min(g.size(), 5));
  for (std::uint64_t s = 0; s < samples && g.size() > 0; ++s) {
    PointSet seed(g.size());
    const int w = width(rng);
    for (int i = 0; i < w; ++i) seed.set(pick(rng));
    const PointSet r = rule_closure(g, seed, arity);
    ++result.examined;
    if (!g.is_flat(r)) {
      result.holds = false;
      result.witness = r.elements();
      return result;
    }
  }
  return result;
}

bool is_generated_by_lines(const Geometry& g) {
  return check_generated_by(g, 2).holds;
}

bool is_generated_by_lines_planes(const Geometry& g) {
  return check_generated_by(g, 3).holds;
}

}  // namespace fgeom
