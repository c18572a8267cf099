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

#ifndef FGEOM_POINT_SET_HPP_
#define FGEOM_POINT_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace fgeom {

// A subset of the point universe {0, ..., universe-1} of a finite geometry.
// Iteration is always in increasing point order, which is the canonical
// tie-breaking order everywhere in the library.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int universe);
  PointSet(int universe, std::initializer_list<int> points);
  PointSet(int universe, std::span<const int> points);

  static PointSet full(int universe);

  int universe() const { return universe_; }
  int count() const;
  bool empty() const;
  bool test(int point) const {
    return (words_[point >> 6] >> (point & 63)) & 1u;
  }
  void set(int point) { words_[point >> 6] |= std::uint64_t{1} << (point & 63); }
  void reset(int point) {
    words_[point >> 6] &= ~(std::uint64_t{1} << (point & 63));
  }

  // -1 when there is no such point.
  int first() const { return next(-1); }
  int next(int after) const;

  bool is_subset_of(const PointSet& other) const;
  bool intersects(const PointSet& other) const;

  PointSet& operator|=(const PointSet& other);
  PointSet& operator&=(const PointSet& other);
  PointSet& operator-=(const PointSet& other);
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  friend PointSet operator-(PointSet a, const PointSet& b) { return a -= b; }

  PointSet complement() const;
  std::vector<int> elements() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        f(static_cast<int>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  // Orders by cardinality, then lexicographically by sorted members.
  friend bool operator<(const PointSet& a, const PointSet& b);

 private:
  void trim();

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

}  // namespace fgeom

#endif  // FGEOM_POINT_SET_HPP_
