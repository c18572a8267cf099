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

#include "fgeom/gf.hpp"

#include <cctype>
#include <map>
#include <mutex>
#include <utility>

#include "fgeom/error.hpp"

namespace fgeom {
namespace {

int mod(int a, int p) { return ((a % p) + p) % p; }

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Remainder of a modulo the monic polynomial m over GF(p); low degree first.
std::vector<int> poly_rem(std::vector<int> a, std::span<const int> m, int p) {
  const int dm = static_cast<int>(m.size()) - 1;
  for (int d = static_cast<int>(a.size()) - 1; d >= dm; --d) {
    const int c = a[d];
    if (c == 0) continue;
    for (int i = 0; i <= dm; ++i) {
      a[d - dm + i] = mod(a[d - dm + i] - c * m[i], p);
    }
  }
  a.resize(std::min<std::size_t>(a.size(), dm));
  return a;
}

// Monic polynomial of degree e whose lower coefficients are the base-p digits
// of index.
std::vector<int> monic_from_index(int p, int e, int index) {
  std::vector<int> poly(e + 1, 0);
  for (int i = 0; i < e; ++i) {
    poly[i] = index % p;
    index /= p;
  }
  poly[e] = 1;
  return poly;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool is_irreducible(int p, std::span<const int> poly) {
  const int d = static_cast<int>(poly.size()) - 1;
  if (d <= 1) return true;
  for (int e = 1; e < d; ++e) {
    const int count = ipow(p, e);
    for (int idx = 0; idx < count; ++idx) {
      auto g = monic_from_index(p, e, idx);
      auto r = poly_rem(std::vector<int>(poly.begin(), poly.end()), g, p);
      bool zero = true;
      for (int c : r) zero = zero && c == 0;
      if (zero) return false;
    }
  }
  return true;
}

std::vector<int> smallest_irreducible(int p, int k) {
  const int count = ipow(p, k);
  for (int idx = 0; idx < count; ++idx) {
    auto poly = monic_from_index(p, k, idx);
    if (is_irreducible(p, poly)) return poly;
  }
  throw Error(ErrorCode::kNoIrreducibleForm,
              "no irreducible polynomial of the requested degree");
}

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(ipow(p, k)), modulus_(std::move(modulus)) {
  const int q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (int a = 0; a < q; ++a) {
    auto ca = coefficients(static_cast<Elem>(a));
    std::vector<int> cn(k_);
    for (int i = 0; i < k_; ++i) cn[i] = mod(-ca[i], p_);
    neg_[a] = from_coefficients(cn);
    for (int b = 0; b < q; ++b) {
      auto cb = coefficients(static_cast<Elem>(b));
      std::vector<int> sum(k_);
      for (int i = 0; i < k_; ++i) sum[i] = (ca[i] + cb[i]) % p_;
      add_[a * q + b] = from_coefficients(sum);
      std::vector<int> prod(2 * k_ - 1, 0);
      for (int i = 0; i < k_; ++i) {
        for (int j = 0; j < k_; ++j) {
          prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
        }
      }
      auto r = poly_rem(std::move(prod), modulus_, p_);
      r.resize(k_, 0);
      mul_[a * q + b] = from_coefficients(r);
    }
  }
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  // x reduced modulo the modulus; for k == 1 the modulus is x itself.
  std::vector<int> x(k_, 0);
  if (k_ > 1) {
    x[1] = 1;
  } else {
    x[0] = mod(-modulus_[0], p_);
  }
  generator_ = from_coefficients(x);
}

FieldPtr Field::get(int q) {
  if (q < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "field order must be at least 2, got " + std::to_string(q));
  }
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1 || !is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                std::to_string(q) + " is not a prime power");
  }
  if (q > kMaxOrder || p > kMaxCharacteristic) {
    throw Error(ErrorCode::kSizeLimit,
                "gf(" + std::to_string(q) + ") exceeds the supported range");
  }
  static std::mutex mu;
  static std::map<int, FieldPtr> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(q);
  if (it != registry.end()) return it->second;
  FieldPtr field(new Field(p, k, smallest_irreducible(p, k)));
  registry.emplace(q, field);
  return field;
}

FieldPtr Field::parse(std::string_view designator) {
  auto bad = [&] {
    return Error(ErrorCode::kParseError,
                 "expected a field designator gf(q), got '" +
                     std::string(designator) + "'");
  };
  if (designator.size() < 5) throw bad();
  std::string lower(designator);
  for (auto& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower.rfind("gf(", 0) != 0 || lower.back() != ')') throw bad();
  const std::string digits = lower.substr(3, lower.size() - 4);
  if (digits.empty() || digits.size() > 6) throw bad();
  for (char c : digits) {
    if (c < '0' || c > '9') throw bad();
  }
  return get(std::stoi(digits));
}

std::string Field::name() const { return "gf(" + std::to_string(q_) + ")"; }

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  return inv_[a];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, unsigned e) const {
  Elem result = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem Field::frobenius(Elem a, int i) const {
  Elem r = a;
  for (int step = 0; step < i; ++step) r = pow(r, static_cast<unsigned>(p_));
  return r;
}

std::vector<int> Field::coefficients(Elem a) const {
  std::vector<int> c(k_);
  int v = a;
  for (int i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Elem Field::from_coefficients(std::span<const int> coeffs) const {
  int v = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    v = v * p_ + mod(coeffs[i], p_);
  }
  return static_cast<Elem>(v);
}

Elem Field::from_int(int c) const { return static_cast<Elem>(mod(c, p_)); }

FieldElement field_arith(const FieldElement& a, const FieldElement& b,
                         FieldOp op) {
  if (!a.field || a.field != b.field) {
    throw Error(ErrorCode::kFieldMismatch,
                "operands belong to different fields");
  }
  const Field& f = *a.field;
  switch (op) {
    case FieldOp::kAdd: return {a.field, f.add(a.value, b.value)};
    case FieldOp::kSub: return {a.field, f.sub(a.value, b.value)};
    case FieldOp::kMul: return {a.field, f.mul(a.value, b.value)};
    case FieldOp::kDiv: return {a.field, f.div(a.value, b.value)};
  }
  return {};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, FieldOp::kAdd);
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, FieldOp::kSub);
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, FieldOp::kMul);
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return field_arith(a, b, FieldOp::kDiv);
}

FieldElement frobenius(const FieldElement& a, int i) {
  if (i < 0 || i >= a.field->degree()) {
    throw Error(ErrorCode::kInvalidArgument, "frobenius index out of range");
  }
  return {a.field, a.field->frobenius(a.value, i)};
}

FieldHom::FieldHom(FieldPtr source, FieldPtr target, Elem image_of_generator)
    : source_(std::move(source)),
      target_(std::move(target)),
      image_of_generator_(image_of_generator) {
  if (source_->characteristic() != target_->characteristic()) {
    throw Error(ErrorCode::kInvalidArgument,
                "field homomorphism between different characteristics");
  }
  const Field& t = *target_;
  table_.resize(source_->order());
  for (int a = 0; a < source_->order(); ++a) {
    auto c = source_->coefficients(static_cast<Elem>(a));
    Elem value = 0;
    Elem power = 1;
    for (int ci : c) {
      value = t.add(value, t.mul(t.from_int(ci), power));
      power = t.mul(power, image_of_generator_);
    }
    table_[a] = value;
  }
}

FieldHom FieldHom::identity(const FieldPtr& field) {
  return FieldHom(field, field, field->generator());
}

FieldHom FieldHom::from_power(const FieldPtr& source, const FieldPtr& target,
                              int power) {
  auto homs = list_homomorphisms(source, target);
  if (homs.empty()) {
    throw Error(ErrorCode::kNoEmbedding,
                source->name() + " does not embed in " + target->name());
  }
  const int k = target->degree();
  const int i = ((power % k) + k) % k;
  std::vector<Elem> table(source->order());
  for (int a = 0; a < source->order(); ++a) {
    table[a] = target->frobenius(homs.front()(static_cast<Elem>(a)), i);
  }
  return from_table(source, target, std::move(table));
}

FieldHom FieldHom::from_table(FieldPtr source, FieldPtr target,
                              std::vector<Elem> table) {
  if (static_cast<int>(table.size()) != source->order()) {
    throw Error(ErrorCode::kInvalidArgument, "hom table has the wrong size");
  }
  FieldHom h;
  h.source_ = std::move(source);
  h.target_ = std::move(target);
  h.table_ = std::move(table);
  h.image_of_generator_ = h.table_[h.source_->generator()];
  return h;
}

bool FieldHom::preserves_structure() const {
  const Field& s = *source_;
  const Field& t = *target_;
  if (table_[0] != 0 || table_[1] != 1) return false;
  for (int a = 0; a < s.order(); ++a) {
    for (int b = 0; b < s.order(); ++b) {
      const auto ea = static_cast<Elem>(a);
      const auto eb = static_cast<Elem>(b);
      if (table_[s.add(ea, eb)] != t.add(table_[a], table_[b])) return false;
      if (table_[s.mul(ea, eb)] != t.mul(table_[a], table_[b])) return false;
    }
  }
  return true;
}

bool FieldHom::is_injective() const {
  std::vector<bool> seen(target_->order(), false);
  for (Elem v : table_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

bool FieldHom::is_identity() const {
  if (source_ != target_) return false;
  for (int a = 0; a < source_->order(); ++a) {
    if (table_[a] != a) return false;
  }
  return true;
}

std::optional<Elem> FieldHom::preimage(Elem b) const {
  for (int a = 0; a < source_->order(); ++a) {
    if (table_[a] == b) return static_cast<Elem>(a);
  }
  return std::nullopt;
}

int FieldHom::frobenius_power() const {
  for (int i = 0; i < target_->degree(); ++i) {
    if (from_power(source_, target_, i) == *this) return i;
  }
  return -1;
}

FieldHom FieldHom::then(const FieldHom& after) const {
  if (after.source_ != target_) {
    throw Error(ErrorCode::kFieldMismatch, "cannot compose field maps");
  }
  std::vector<Elem> table(source_->order());
  for (int a = 0; a < source_->order(); ++a) table[a] = after(table_[a]);
  return from_table(source_, after.target_, std::move(table));
}

std::vector<FieldHom> list_homomorphisms(const FieldPtr& source,
                                         const FieldPtr& target) {
  std::vector<FieldHom> homs;
  if (source->characteristic() != target->characteristic()) return homs;
  const Field& t = *target;
  const auto& m = source->modulus();
  for (int g = 0; g < t.order(); ++g) {
    Elem value = 0;
    Elem power = 1;
    for (int c : m) {
      value = t.add(value, t.mul(t.from_int(c), power));
      power = t.mul(power, static_cast<Elem>(g));
    }
    if (value != 0) continue;
    FieldHom h(source, target, static_cast<Elem>(g));
    if (h.preserves_structure()) homs.push_back(std::move(h));
  }
  return homs;
}

}  // namespace fgeom
