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

#include <random>
#include <set>

#include "fgeom/error.hpp"
#include "fgeom/gf.hpp"
#include "fgeom/linalg.hpp"
#include "support/oracles.hpp"

namespace fgeom {
namespace {

using testing::NaiveField;

const int kOrders[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16};

TEST(Field, ModulusMatchesBruteForceSearch) {
  for (int q : kOrders) {
    const FieldPtr f = Field::get(q);
    const NaiveField nf(f->characteristic(), f->degree());
    EXPECT_EQ(nf.q(), q);
    EXPECT_EQ(f->modulus(), nf.modulus()) << "q=" << q;
  }
}

TEST(Field, TablesMatchPolynomialArithmetic) {
  for (int q : kOrders) {
    const FieldPtr f = Field::get(q);
    const NaiveField nf(f->characteristic(), f->degree());
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        const Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b);
        ASSERT_EQ(f->add(ea, eb), nf.add(a, b)) << q << ": " << a << "+" << b;
        ASSERT_EQ(f->sub(ea, eb), nf.sub(a, b));
        ASSERT_EQ(f->mul(ea, eb), nf.mul(a, b)) << q << ": " << a << "*" << b;
      }
    }
  }
}

TEST(Field, SpecExamples) {
  const FieldPtr f4 = Field::get(4);
  // x has code 2, x+1 has code 3.
  EXPECT_EQ(f4->mul(2, 2), 3);
  const FieldElement x{f4, 2};
  EXPECT_EQ((x * x).value, 3);
  EXPECT_EQ(frobenius(x, 1).value, 3);

  const FieldPtr f5 = Field::get(5);
  for (Elem a = 0; a < 5; ++a) EXPECT_EQ(f5->mul(1, a), a);

  const FieldPtr f3 = Field::get(3);
  EXPECT_EQ((FieldElement{f3, 2} + FieldElement{f3, 2}).value, 1);
}

TEST(Field, FieldAxiomsExhaustive) {
  for (int q : kOrders) {
    const FieldPtr fp = Field::get(q);
    const Field& f = *fp;
    for (int a = 0; a < q; ++a) {
      const Elem ea = static_cast<Elem>(a);
      if (a != 0) {
        ASSERT_EQ(f.mul(ea, f.inv(ea)), 1);
      }
      ASSERT_EQ(f.add(ea, f.neg(ea)), 0);
      for (int b = 0; b < q; ++b) {
        const Elem eb = static_cast<Elem>(b);
        ASSERT_EQ(f.add(ea, eb), f.add(eb, ea));
        ASSERT_EQ(f.mul(ea, eb), f.mul(eb, ea));
        for (int c = 0; c < q; ++c) {
          const Elem ec = static_cast<Elem>(c);
          ASSERT_EQ(f.mul(f.mul(ea, eb), ec), f.mul(ea, f.mul(eb, ec)));
          ASSERT_EQ(f.add(f.add(ea, eb), ec), f.add(ea, f.add(eb, ec)));
          ASSERT_EQ(f.mul(ea, f.add(eb, ec)), f.add(f.mul(ea, eb), f.mul(ea, ec)));
        }
      }
    }
  }
}

TEST(Field, DivisionByZeroThrows) {
  const FieldPtr f = Field::get(7);
  EXPECT_THROW(f->inv(0), Error);
  EXPECT_THROW((FieldElement{f, 3} / FieldElement{f, 0}), Error);
}

TEST(Field, MixedFieldsRejected) {
  try {
    (void)(FieldElement{Field::get(2), 1} + FieldElement{Field::get(3), 1});
    FAIL() << "expected FieldMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldMismatch);
  }
}

TEST(Field, UnsupportedOrders) {
  EXPECT_THROW(Field::get(6), Error);
  EXPECT_THROW(Field::get(17), Error);
  EXPECT_THROW(Field::get(32), Error);
  EXPECT_THROW(Field::parse("gf(x)"), Error);
  EXPECT_EQ(Field::parse("gf(9)")->order(), 9);
  EXPECT_EQ(Field::get(9), Field::get(9));
}

TEST(Field, FrobeniusHasOrderK) {
  for (int q : kOrders) {
    const FieldPtr f = Field::get(q);
    const NaiveField nf(f->characteristic(), f->degree());
    for (int a = 0; a < q; ++a) {
      const Elem e = static_cast<Elem>(a);
      EXPECT_EQ(f->frobenius(e, 0), e);
      EXPECT_EQ(f->frobenius(e, f->degree()), e);
      EXPECT_EQ(f->frobenius(e, 1), nf.frob(a, 1));
      Elem it = e;
      for (int i = 0; i < f->degree(); ++i) it = f->frobenius(it, 1);
      EXPECT_EQ(it, e);
    }
  }
}

// Candidate-table enumeration: every additive and multiplicative map.
int count_homs_by_enumeration(int qs, int qt) {
  const FieldPtr s = Field::get(qs), t = Field::get(qt);
  if (s->characteristic() != t->characteristic()) return 0;
  int count = 0;
  const int candidates = s->degree() > 1 ? qt : 1;
  for (int g = 0; g < candidates; ++g) {
    // A hom is determined by its value on the prime-field basis 1, x, x^2...
    std::vector<Elem> table(qs);
    bool ok = true;
    for (int a = 0; a < qs && ok; ++a) {
      const std::vector<int> c = s->coefficients(static_cast<Elem>(a));
      Elem img = 0, power = 1;
      for (int co : c) {
        for (int r = 0; r < co; ++r) img = t->add(img, power);
        power = t->mul(power, static_cast<Elem>(g));
      }
      table[a] = img;
    }
    for (int a = 0; a < qs && ok; ++a) {
      for (int b = 0; b < qs && ok; ++b) {
        ok = table[s->mul(a, b)] == t->mul(table[a], table[b]);
      }
    }
    if (ok && table[1] == 1) ++count;
  }
  return count;
}

TEST(FieldHom, ListHomomorphismsCounts) {
  EXPECT_EQ(list_homomorphisms(Field::get(2), Field::get(2)).size(), 1u);
  EXPECT_TRUE(list_homomorphisms(Field::get(2), Field::get(2)).front().is_identity());
  EXPECT_EQ(list_homomorphisms(Field::get(4), Field::get(16)).size(), 2u);
  EXPECT_TRUE(list_homomorphisms(Field::get(4), Field::get(8)).empty());
  for (int qs : kOrders) {
    for (int qt : kOrders) {
      const auto homs = list_homomorphisms(Field::get(qs), Field::get(qt));
      EXPECT_EQ(static_cast<int>(homs.size()), count_homs_by_enumeration(qs, qt))
          << qs << "->" << qt;
      for (const FieldHom& h : homs) {
        EXPECT_TRUE(h.preserves_structure());
        EXPECT_TRUE(h.is_injective());
        std::set<Elem> image(h.table().begin(), h.table().end());
        EXPECT_EQ(static_cast<int>(image.size()), qs);
      }
    }
  }
}

TEST(FieldHom, PowersAndComposition) {
  const FieldPtr f9 = Field::get(9);
  const FieldHom frob = FieldHom::from_power(f9, f9, 1);
  EXPECT_EQ(frob.frobenius_power(), 1);
  EXPECT_TRUE(frob.then(frob).is_identity());
  EXPECT_EQ(FieldHom::from_power(f9, f9, 2), FieldHom::identity(f9));
  const FieldHom e0 = FieldHom::from_power(Field::get(2), Field::get(4), 0);
  const FieldHom e1 = FieldHom::from_power(Field::get(2), Field::get(4), 1);
  EXPECT_EQ(e0, e1);  // GF(2) has a single embedding
  for (Elem a = 0; a < 9; ++a) {
    const auto pre = frob.preimage(frob(a));
    ASSERT_TRUE(pre.has_value());
    EXPECT_EQ(*pre, a);
  }
  EXPECT_THROW(FieldHom::from_power(Field::get(4), Field::get(8), 0), Error);
}

TEST(Linalg, RankMatchesNaiveOracle) {
  std::mt19937_64 rng(11);
  for (int q : {2, 3, 4, 5, 9}) {
    const FieldPtr f = Field::get(q);
    const NaiveField nf(f->characteristic(), f->degree());
    std::uniform_int_distribution<int> d(0, q - 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Vec> rows(4, Vec(5));
      std::vector<testing::IntVec> irows(4, testing::IntVec(5));
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 5; ++c) {
          irows[r][c] = (trial % 3 == 0 && r == 3) ? irows[0][c] : d(rng);
          rows[r][c] = static_cast<Elem>(irows[r][c]);
        }
      }
      EXPECT_EQ(rank(*f, rows), testing::naive_rank(nf, irows));
    }
  }
}

TEST(Linalg, KernelAndSolve) {
  std::mt19937_64 rng(12);
  const FieldPtr f = Field::get(5);
  std::uniform_int_distribution<int> d(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m(3, 4);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 4; ++c) m(r, c) = static_cast<Elem>(d(rng));
    const auto ker = kernel_basis(*f, m);
    std::vector<Vec> rows;
    for (int r = 0; r < 3; ++r) rows.push_back(m.row(r));
    EXPECT_EQ(static_cast<int>(ker.size()), 4 - rank(*f, rows));
    for (const Vec& k : ker) EXPECT_TRUE(is_zero(mat_vec(*f, m, k)));
    Vec x(4);
    for (auto& e : x) e = static_cast<Elem>(d(rng));
    const Vec b = mat_vec(*f, m, x);
    const auto sol = solve(*f, m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(mat_vec(*f, m, *sol), b);
  }
}

TEST(Linalg, SubspaceOperations) {
  const FieldPtr f = Field::get(3);
  const auto a = LinearSubspace::span(f, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  const auto b = LinearSubspace::span(f, 4, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  EXPECT_EQ(a.join(b).dim(), 3);
  EXPECT_EQ(a.meet(b).dim(), 1);
  EXPECT_TRUE(a.meet(b).contains(Vec{0, 2, 0, 0}));
  EXPECT_EQ(a.canonical_complement().dim(), 2);
  EXPECT_EQ(a.join(a.canonical_complement()).dim(), 4);
  EXPECT_EQ(a.annihilator().size(), 2u);
  for (const Vec& form : a.annihilator()) {
    for (const Vec& v : a.basis()) {
      Elem s = 0;
      for (int i = 0; i < 4; ++i) s = f->add(s, f->mul(form[i], v[i]));
      EXPECT_EQ(s, 0);
    }
  }
  const Vec v{2, 1, 1, 2};
  EXPECT_EQ(a.lift(a.quotient_coords(v)).size(), 4u);
  EXPECT_TRUE(a.contains(axpy_sub(*f, v, 1, a.lift(a.quotient_coords(v)))));
}

}  // namespace
}  // namespace fgeom
