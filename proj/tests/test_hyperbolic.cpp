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

#include <array>

#include "alphaperm/hyperbolic.hpp"
#include "alphaperm/permanent.hpp"
#include "oracles.hpp"

namespace alphaperm {
namespace {

RSparsePoly monomial_product(std::size_t n) { return elementary_symmetric_poly(n, n); }

RVector random_vector(RationalSampler& rng, std::size_t n) {
  RVector v(n);
  for (auto& x : v) x = rng.rational(-6, 6, 4);
  return v;
}

bool leading_minors_positive(const RMatrix& a) {
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    if (oracle::det_cofactor(a.principal(idx)).sign() <= 0) return false;
  }
  return true;
}

TEST(DirectionalDerivative, Examples) {
  const auto x1x2 = monomial_product(2);
  EXPECT_EQ(directional_derivative(x1x2, RVector{1, 0}), RSparsePoly::variable(2, 1));
  const auto lor = lorentz_poly(3);
  EXPECT_EQ(directional_derivative(lor, RVector{1, 0, 0}), RSparsePoly::variable(3, 0) * Rational(2));
  RSparsePoly h = lor;
  for (int i = 0; i < 3; ++i) h = directional_derivative(h, RVector{1, 2, 3});
  EXPECT_TRUE(h.is_zero());
  EXPECT_THROW(directional_derivative(lor, RVector{1, 0}), ShapeError);
}

TEST(PolarizedForm, DiagonalIdentity) {
  RationalSampler rng(51);
  const auto h = lorentz_poly(4) * RSparsePoly::variable(4, 2) + monomial_product(4).partial(3);
  ASSERT_TRUE(h.is_homogeneous());
  for (int t = 0; t < 10; ++t) {
    const auto v = random_vector(rng, 4);
    std::vector<RVector> vs(3, v);
    EXPECT_EQ(polarized_form(h, vs), h(v));
  }
  EXPECT_THROW(polarized_form(h, std::vector<RVector>(2, RVector(4))), PreconditionError);
}

TEST(PolarizedForm, ProductGivesPermanent) {
  RationalSampler rng(52);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto h = monomial_product(n);
    std::vector<RVector> vs;
    RMatrix cols(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      vs.push_back(random_vector(rng, n));
      for (std::size_t i = 0; i < n; ++i) cols(i, j) = vs[j][i];
    }
    EXPECT_EQ(polarized_form(h, vs) * factorial(n), per_naive(cols));
  }
}

TEST(PolarizedForm, SymmetricAndMultilinear) {
  RationalSampler rng(53);
  const auto h = symmetric_det_poly(2) * RSparsePoly::variable(3, 1);
  std::vector<RVector> vs;
  for (int i = 0; i < 3; ++i) vs.push_back(random_vector(rng, 3));
  const Rational base = polarized_form(h, vs);
  auto swapped = vs;
  std::swap(swapped[0], swapped[2]);
  EXPECT_EQ(polarized_form(h, swapped), base);

  const auto w = random_vector(rng, 3);
  const Rational a(3, 7), b(-2);
  auto combo = vs;
  for (std::size_t i = 0; i < 3; ++i) combo[1][i] = a * vs[1][i] + b * w[i];
  auto with_w = vs;
  with_w[1] = w;
  EXPECT_EQ(polarized_form(h, combo), a * base + b * polarized_form(h, with_w));
}

TEST(PartialPolarization, Examples) {
  const auto h = monomial_product(3);
  EXPECT_EQ(partial_polarization(h, std::vector<RVector>{}), h);
  const auto g = partial_polarization(h, std::vector<RVector>{{1, 1, 1}});
  EXPECT_EQ(g, elementary_symmetric_poly(3, 2) * Rational(1, 3));
  EXPECT_THROW(partial_polarization(h, std::vector<RVector>(3, RVector{1, 1, 1})), PreconditionError);
}

TEST(PartialPolarization, EvaluatesToPolarizedForm) {
  RationalSampler rng(54);
  const auto h = symmetric_det_poly(3);
  for (int t = 0; t < 5; ++t) {
    std::vector<RVector> bs{random_vector(rng, 6), random_vector(rng, 6)};
    const auto x = random_vector(rng, 6);
    std::vector<RVector> full = bs;
    full.push_back(x);
    EXPECT_EQ(partial_polarization(h, bs)(x), polarized_form(h, full));
  }
}

TEST(CertifyHyperbolic, PaperExamples) {
  const auto prod = certify_hyperbolic(monomial_product(4), RVector(4, Rational(1)), 200, 7);
  EXPECT_TRUE(prod.certified());
  EXPECT_EQ(prod.cert.lines_passed, 200u);
  const auto lor = certify_hyperbolic(lorentz_poly(3), RVector{1, 0, 0}, 200, 7);
  EXPECT_TRUE(lor.certified());
  const auto det3 = certify_hyperbolic(symmetric_det_poly(3), flatten_sym(RMatrix::identity(3)), 100, 7);
  EXPECT_TRUE(det3.certified());
}

TEST(CertifyHyperbolic, FailsWithCounterexample) {
  RSparsePoly h(2);
  h.add_term(MultiIndex{2, 0}, Rational(1));
  h.add_term(MultiIndex{0, 2}, Rational(1));
  const auto inst = certify_hyperbolic(h, RVector{1, 0}, 200, 3);
  ASSERT_FALSE(inst.certified());
  ASSERT_TRUE(inst.cert.counterexample.has_value());
  EXPECT_FALSE(sturm_real_rooted(h.restrict_to_line(*inst.cert.counterexample, inst.e)));
  // the named counterexample from the closed form
  EXPECT_FALSE(sturm_real_rooted(h.restrict_to_line(RVector{0, 1}, RVector{1, 0})));
  EXPECT_THROW(cone_member(inst, RVector{1, 0}), PreconditionError);

  EXPECT_THROW(certify_hyperbolic(lorentz_poly(2), RVector{1, 1}, 10, 1), PreconditionError);
  EXPECT_THROW(certify_hyperbolic(lorentz_poly(2) + RSparsePoly::variable(2, 0), RVector{1, 0}, 10, 1),
               PreconditionError);
}

TEST(ConeMember, ClosedForms) {
  RationalSampler rng(55);
  const auto orth = certify_hyperbolic(monomial_product(3), RVector(3, Rational(1)), 50, 1);
  const auto lor = certify_hyperbolic(lorentz_poly(3), RVector{1, 0, 0}, 50, 1);
  const auto pd = certify_hyperbolic(symmetric_det_poly(2), flatten_sym(RMatrix::identity(2)), 50, 1);
  for (int t = 0; t < 60; ++t) {
    const auto x = random_vector(rng, 3);
    const bool positive = std::all_of(x.begin(), x.end(), [](const Rational& v) { return v.sign() > 0; });
    EXPECT_EQ(cone_member(orth, x), positive);
    EXPECT_EQ(cone_member(lor, x), x[0].sign() > 0 && lorentz_poly(3)(x).sign() > 0);
    EXPECT_EQ(cone_member(pd, x), leading_minors_positive(unflatten_sym(2, x)));
  }
  EXPECT_TRUE(cone_member(lor, lor.e));
  EXPECT_FALSE(cone_member(orth, RVector{1, 0, 2}));   // boundary
  EXPECT_FALSE(cone_member(lor, RVector{5, 3, 4}));    // boundary
}

TEST(MixedDiscriminant, Examples) {
  RationalSampler rng(56);
  const auto a = rng.psd<Rational>(3, 3);
  std::array<RMatrix, 3> same{a, a, a};
  EXPECT_EQ(mixed_discriminant<Rational>(same), det_exact(a));

  std::array<RMatrix, 2> diag{RMatrix::diagonal(RVector{1, 0}), RMatrix::diagonal(RVector{0, 1})};
  EXPECT_EQ(mixed_discriminant<Rational>(diag), Rational(1, 2));

  std::array<RMatrix, 3> ms{rng.psd<Rational>(3, 2), rng.psd<Rational>(3, 3), rng.psd<Rational>(3, 1)};
  const auto other = rng.psd<Rational>(3, 3);
  const Rational s(5, 2), u(-1, 3);
  auto combo = ms;
  combo[0] = ms[0] * s + other * u;
  auto with_other = ms;
  with_other[0] = other;
  EXPECT_EQ(mixed_discriminant<Rational>(combo),
            s * mixed_discriminant<Rational>(ms) + u * mixed_discriminant<Rational>(with_other));

  // agrees with polarizing the flattened determinant
  std::vector<RVector> flat;
  for (const auto& m : ms) flat.push_back(flatten_sym(m));
  EXPECT_EQ(mixed_discriminant<Rational>(ms), polarized_form(symmetric_det_poly(3), flat));

  std::array<RMatrix, 2> bad{RMatrix(3, 3), RMatrix(3, 3)};
  EXPECT_THROW(mixed_discriminant<Rational>(bad), ShapeError);
}

TEST(MixedDiscriminant, HermitianIsReal) {
  RationalSampler rng(57);
  std::array<CMatrix, 2> ms{rng.psd<ComplexRational>(2, 2), rng.psd<ComplexRational>(2, 1)};
  const auto v = mixed_discriminant<ComplexRational>(ms);
  EXPECT_TRUE(v.is_real());
  EXPECT_GE(v.real().sign(), 0);
}

TEST(Garding, Examples) {
  const auto prod = certify_hyperbolic(monomial_product(3), RVector(3, Rational(1)), 100, 9);
  const auto r = garding_lemma_test(prod, RVector(3, Rational(1)), 100, 50, 9);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.points_checked, 50u);
  EXPECT_EQ(directional_derivative(prod.h, RVector(3, Rational(1))), elementary_symmetric_poly(3, 2));

  const auto lor = certify_hyperbolic(lorentz_poly(4), RVector{1, 0, 0, 0}, 100, 9);
  EXPECT_TRUE(garding_lemma_test(lor, lor.e, 100, 50, 9).passed);
  EXPECT_THROW(garding_lemma_test(lor, RVector{0, 1, 0, 0}, 10, 10, 9), PreconditionError);
}

TEST(Garding, CorruptedDerivativeFails) {
  const auto prod = certify_hyperbolic(monomial_product(3), RVector(3, Rational(1)), 100, 9);
  auto g = elementary_symmetric_poly(3, 2);
  g.add_term(MultiIndex{0, 1, 1}, Rational(-2));
  const auto r = derivative_cone_test(prod, g, 100, 200, 9);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.witnesses.empty());
}

}  // namespace
}  // namespace alphaperm
