/*
 * Copyright 2026 The alphaperm Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <set>

#include "alphaperm/linalg.hpp"
#include "alphaperm/random.hpp"
#include "alphaperm/unipoly.hpp"
#include "oracles.hpp"

namespace alphaperm {
namespace {

TEST(Rational, CanonicalForm) {
  Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r.to_string(), "-3/2");
  EXPECT_EQ(Rational::parse("10/5").to_string(), "2");
  EXPECT_EQ(Rational::parse("-7").to_string(), "-7");
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("1.5"), ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), ParseError);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(ComplexRational, ConjugationAndNorm) {
  ComplexRational z(Rational(3, 2), Rational(-2));
  EXPECT_EQ(z.conj().conj(), z);
  EXPECT_EQ(z.norm2(), Rational(25, 4));
  EXPECT_EQ(z * z.reciprocal(), ComplexRational(1));
  EXPECT_EQ(ComplexRational::i() * ComplexRational::i(), ComplexRational(-1));
}

TEST(DetExact, SmallCases) {
  RMatrix a{{1, 2}, {3, 4}};
  EXPECT_EQ(det_exact(a), Rational(-2));
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_EQ(det_exact(RMatrix::identity(n)), Rational(1));
  RMatrix needs_pivot{{0, 1, 2}, {1, 0, 3}, {4, -3, 8}};
  EXPECT_EQ(det_exact(needs_pivot), oracle::det_cofactor(needs_pivot));
  EXPECT_THROW(det_exact(RMatrix(2, 3)), ShapeError);
}

TEST(DetExact, MatchesCofactorExpansion) {
  RationalSampler rng(11);
  for (int t = 0; t < 40; ++t) {
    const auto a = rng.matrix(5, 5);
    EXPECT_EQ(det_exact(a), oracle::det_cofactor(a));
  }
  for (int t = 0; t < 10; ++t) {
    const auto c = rng.complex_matrix(4, 4);
    EXPECT_EQ(det_exact(c), oracle::det_cofactor(c));
  }
}

TEST(CharPoly, DiagonalAndZero) {
  RMatrix d{{1, 0}, {0, 2}};
  EXPECT_EQ(char_poly(d), (RPoly{2, -3, 1}));
  EXPECT_EQ(char_poly(RMatrix(3, 3)), RPoly::monomial(3));
  EXPECT_THROW(char_poly(RMatrix(2, 1)), ShapeError);
}

TEST(CharPoly, CoefficientsAreSignedPrincipalMinorSums) {
  RationalSampler rng(12);
  for (int t = 0; t < 10; ++t) {
    const auto a = rng.matrix(4, 4);
    const auto p = char_poly(a);
    for (std::size_t k = 0; k <= 4; ++k) {
      Rational expected = k == 0 ? Rational(1) : oracle::principal_minor_sum(a, k);
      if (k % 2 == 1) expected = -expected;
      EXPECT_EQ(p.coeff(4 - k), expected);
    }
  }
}

TEST(CharPoly, VanishesAtConstructedEigenvalues) {
  // A = P D P^{-1} with rational P, D.
  RationalSampler rng(13);
  for (int t = 0; t < 10; ++t) {
    RMatrix p = rng.matrix(4, 4);
    while (det_exact(p).is_zero()) p = rng.matrix(4, 4);
    std::vector<Rational> eig{Rational(1), Rational(-2, 3), Rational(5), Rational(1)};
    const RMatrix a = p * RMatrix::diagonal(eig) * inverse_exact(p);
    const auto cp = char_poly(a);
    for (const auto& l : eig) EXPECT_TRUE(cp(l).is_zero());
    EXPECT_FALSE(cp(Rational(7)).is_zero());
  }
}

TEST(IsPsdExact, Examples) {
  RMatrix d{{1, 0, 0}, {0, 0, 0}, {0, 0, 2}};
  d.assert_selfadjoint();
  EXPECT_TRUE(is_psd_exact(d));
  RMatrix indefinite{{1, 2}, {2, 1}};
  indefinite.assert_selfadjoint();
  EXPECT_FALSE(is_psd_exact(indefinite));
  RMatrix unflagged{{1, 0}, {0, 1}};
  EXPECT_THROW(is_psd_exact(unflagged), PreconditionError);
  RMatrix asym{{1, 2}, {0, 1}};
  EXPECT_THROW(asym.assert_selfadjoint(), PreconditionError);
}

TEST(IsPsdExact, GramMatricesArePsd) {
  RationalSampler rng(14);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + static_cast<std::size_t>(t % 5);
    const std::size_t rows = 1 + static_cast<std::size_t>(t % 4);
    EXPECT_TRUE(is_psd_exact(rng.psd<Rational>(n, rows)));
  }
  for (int t = 0; t < 20; ++t) EXPECT_TRUE(is_psd_exact(rng.psd<ComplexRational>(3, 2)));
}

TEST(IsPsdExact, DetectsNegativeDirectionInRankDeficientMatrix) {
  // Gram matrix minus a tiny multiple of a rank-one term outside its range.
  RMatrix g{{1, 1, 0}, {1, 1, 0}, {0, 0, 0}};
  g.assert_selfadjoint();
  EXPECT_TRUE(is_psd_exact(g));
  g(2, 2) = Rational(-1, 1000);
  g.assert_selfadjoint();
  EXPECT_FALSE(is_psd_exact(g));
}

TEST(Sylvester, Examples) {
  RMatrix u{{1}, {2}, {3}};
  RMatrix vt{{4, -1, 2}};
  EXPECT_TRUE(sylvester_check(u, vt));
  // both sides 1 - v^T u
  EXPECT_EQ(det_exact(RMatrix::identity(1) - vt * u), Rational(1 - (4 - 2 + 6)));
  EXPECT_TRUE(sylvester_check(RMatrix(2, 3), RMatrix(3, 2)));
  EXPECT_THROW(sylvester_check(RMatrix(2, 3), RMatrix(2, 3)), ShapeError);
}

TEST(Sylvester, RandomShapes) {
  RationalSampler rng(15);
  for (int t = 0; t < 100; ++t) {
    const auto m = static_cast<std::size_t>(rng.integer(1, 5));
    const auto n = static_cast<std::size_t>(rng.integer(1, 5));
    const auto a = rng.matrix(m, n);
    const auto b = rng.matrix(n, m);
    EXPECT_TRUE(sylvester_check(a, b)) << "m=" << m << " n=" << n;
  }
}

TEST(Sturm, RealRootedness) {
  EXPECT_TRUE(sturm_real_rooted(RPoly{-1, 0, 1}));
  EXPECT_FALSE(sturm_real_rooted(RPoly{1, 0, 1}));
  // (t-1)^2 (t+3)
  EXPECT_TRUE(sturm_real_rooted(RPoly{-1, 1} * RPoly{-1, 1} * RPoly{3, 1}));
  EXPECT_THROW(sturm_real_rooted(RPoly{}), PreconditionError);
  EXPECT_TRUE(sturm_real_rooted(RPoly{5}));
}

TEST(Sturm, AgreesWithConstructedFactorizations) {
  RationalSampler rng(16);
  for (int t = 0; t < 50; ++t) {
    std::vector<Rational> roots;
    const long k = rng.integer(1, 5);
    for (long i = 0; i < k; ++i) roots.push_back(rng.rational(-10, 10, 4));
    if (t % 3 == 0) roots.push_back(roots.front());  // repeated root
    RPoly p = RPoly::from_roots(roots) * Rational(rng.integer(1, 9));
    EXPECT_TRUE(sturm_real_rooted(p));
    std::set<Rational> distinct(roots.begin(), roots.end());
    EXPECT_EQ(count_distinct_real_roots(p), static_cast<int>(distinct.size()));
    // multiply by an irreducible quadratic t^2 + c, c > 0
    RPoly q = p * RPoly{rng.positive(20), 0, 1};
    EXPECT_FALSE(sturm_real_rooted(q));
  }
}

TEST(Sturm, AllNegativeRoots) {
  EXPECT_TRUE(sturm_roots_all_negative(RPoly{1, 1} * RPoly{2, 1}));
  EXPECT_FALSE(sturm_roots_all_negative(RPoly{1, 1} * RPoly{-2, 1}));
  EXPECT_FALSE(sturm_roots_all_negative(RPoly{0, 1} * RPoly{1, 1}));
  EXPECT_TRUE(sturm_roots_all_negative(RPoly{3}));
  EXPECT_THROW(sturm_roots_all_negative(RPoly{}), PreconditionError);
  // repeated negative roots
  EXPECT_TRUE(sturm_roots_all_negative(RPoly{1, 1} * RPoly{1, 1} * RPoly{Rational(1, 3), 1}));
}

TEST(UniPoly, DivisionAndGcd) {
  const RPoly a = RPoly{-1, 1} * RPoly{2, 1} * RPoly{3, 1};
  const RPoly b = RPoly{-1, 1} * RPoly{5, 1};
  const auto [q, r] = a.divmod(b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  EXPECT_EQ(gcd(a, b), (RPoly{-1, 1}));
  EXPECT_EQ(squarefree_part(RPoly{-1, 1} * RPoly{-1, 1}), (RPoly{-1, 1}));
}

TEST(RankInverse, Basics) {
  RMatrix a{{1, 2}, {2, 4}};
  EXPECT_EQ(rank_exact(a), 1u);
  EXPECT_THROW(inverse_exact(a), PreconditionError);
  RationalSampler rng(17);
  for (int t = 0; t < 10; ++t) {
    auto m = rng.matrix(4, 4);
    if (det_exact(m).is_zero()) continue;
    EXPECT_EQ(m * inverse_exact(m), RMatrix::identity(4));
  }
}

}  // namespace
}  // namespace alphaperm
