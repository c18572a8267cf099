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

#ifndef FGEOM_GF_HPP_
#define FGEOM_GF_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fgeom {

// Canonical integer encoding of an element of GF(p^k): the coefficient tuple
// (c_0, ..., c_{k-1}) of its polynomial representative is stored as
// sum c_i p^i. Numeric order on encodings is the lexicographic order on
// coefficient tuples read from the highest degree down.
using Elem = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^k) with the lexicographically smallest monic irreducible modulus.
// Instances are interned: Field::get(q) always returns the same object for
// the same q, so pointer equality is field equality.
class Field {
 public:
  static constexpr int kMaxOrder = 16;
  static constexpr int kMaxCharacteristic = 13;

  static FieldPtr get(int q);
  // Accepts designators of the form "gf(q)".
  static FieldPtr parse(std::string_view designator);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }
  // Low degree first; modulus().size() == degree() + 1 and the last entry is 1.
  const std::vector<int>& modulus() const { return modulus_; }
  std::string name() const;

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, unsigned e) const;
  // a^(p^i).
  Elem frobenius(Elem a, int i) const;
  // The residue class of x.
  Elem generator() const { return generator_; }

  std::vector<int> coefficients(Elem a) const;
  Elem from_coefficients(std::span<const int> coeffs) const;
  // Encoding of the prime-field element c (0 <= c < p).
  Elem from_int(int c) const;

 private:
  Field(int p, int k, std::vector<int> modulus);

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  Elem generator_ = 0;
};

// True iff the polynomial (low degree first, monic) is irreducible over
// GF(p), by trial division with every monic polynomial of lower degree.
bool is_irreducible(int p, std::span<const int> poly);

// Smallest monic irreducible polynomial of degree k over GF(p), compared
// from the highest degree coefficient down.
std::vector<int> smallest_irreducible(int p, int k);

enum class FieldOp { kAdd, kSub, kMul, kDiv };

// An element bundled with its field, for API boundaries where the field is
// not otherwise known. Kernels work on raw Elem values.
struct FieldElement {
  FieldPtr field;
  Elem value = 0;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field == b.field && a.value == b.value;
  }
};

FieldElement field_arith(const FieldElement& a, const FieldElement& b,
                         FieldOp op);
FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator/(const FieldElement& a, const FieldElement& b);
FieldElement frobenius(const FieldElement& a, int i);

// A ring homomorphism GF(q) -> GF(q'), stored as its full value table.
class FieldHom {
 public:
  // Builds the candidate map x -> image_of_generator extended additively and
  // multiplicatively. Does not check that the result is a homomorphism; use
  // preserves_structure() or obtain instances from list_homomorphisms().
  FieldHom(FieldPtr source, FieldPtr target, Elem image_of_generator);

  static FieldHom identity(const FieldPtr& field);
  // Frobenius^power of the target composed with the canonical embedding.
  static FieldHom from_power(const FieldPtr& source, const FieldPtr& target,
                             int power);
  // Builds a map from an explicit value table (used to test extracted maps).
  static FieldHom from_table(FieldPtr source, FieldPtr target,
                             std::vector<Elem> table);

  const FieldPtr& source() const { return source_; }
  const FieldPtr& target() const { return target_; }
  Elem image_of_generator() const { return image_of_generator_; }
  Elem operator()(Elem a) const { return table_[a]; }
  std::span<const Elem> table() const { return table_; }

  bool preserves_structure() const;
  bool is_injective() const;
  bool is_identity() const;
  std::optional<Elem> preimage(Elem b) const;
  // Smallest i with *this == from_power(source, target, i); -1 if none.
  int frobenius_power() const;
  // after o this.
  FieldHom then(const FieldHom& after) const;

  friend bool operator==(const FieldHom& a, const FieldHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ &&
           a.table_ == b.table_;
  }

 private:
  FieldHom() = default;

  FieldPtr source_;
  FieldPtr target_;
  Elem image_of_generator_ = 0;
  std::vector<Elem> table_;
};

// All ring homomorphisms source -> target, ordered by the image of the
// generator. Empty unless the characteristics agree and the degree of the
// source divides the degree of the target.
std::vector<FieldHom> list_homomorphisms(const FieldPtr& source,
                                         const FieldPtr& target);

}  // namespace fgeom

#endif  // FGEOM_GF_HPP_
