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

#include "alphaperm/json_io.hpp"
#include "alphaperm/random.hpp"

namespace alphaperm {
namespace {

using json_io::Json;

TEST(JsonMatrix, CanonicalRoundTripIsByteExact) {
  const std::string real = R"({"rows":2,"cols":3,"entries":[[1,"-3/4",0],["7/2",-12,"100000000000000000000000"]]})";
  EXPECT_EQ(json_io::matrix_to_json(json_io::matrix_from_json<Rational>(json_io::parse(real))).dump(), real);

  const std::string cplx = R"({"rows":2,"cols":2,"entries":[[[1,0],["1/2",-1]],[["1/2",1],[3,0]]]})";
  const auto any = json_io::any_matrix_from_json(json_io::parse(cplx));
  ASSERT_TRUE(std::holds_alternative<CMatrix>(any));
  EXPECT_TRUE(std::get<CMatrix>(any).is_hermitian());
  EXPECT_EQ(json_io::matrix_to_json(std::get<CMatrix>(any)).dump(), cplx);
}

TEST(JsonMatrix, RandomRoundTrip) {
  RationalSampler rng(81);
  for (int t = 0; t < 20; ++t) {
    const auto a = rng.matrix(3, 4);
    EXPECT_EQ(json_io::matrix_from_json<Rational>(json_io::matrix_to_json(a)), a);
    const auto c = rng.complex_matrix(2, 2);
    const auto text = json_io::matrix_to_json(c).dump();
    EXPECT_EQ(json_io::matrix_to_json(json_io::matrix_from_json<ComplexRational>(json_io::parse(text))).dump(), text);
  }
}

TEST(JsonMatrix, Errors) {
  auto bad = [](const std::string& s) { return json_io::matrix_from_json<Rational>(json_io::parse(s)); };
  EXPECT_THROW(bad(R"({"rows":1,"cols":1,"entries":[[0.5]]})"), ParseError);
  EXPECT_THROW(bad(R"({"rows":1,"cols":1,"entries":[["1/0"]]})"), ParseError);
  EXPECT_THROW(bad(R"({"rows":2,"cols":1,"entries":[[1]]})"), ParseError);
  EXPECT_THROW(bad(R"({"rows":1,"cols":2,"entries":[[1]]})"), ParseError);
  EXPECT_THROW(bad(R"({"rows":1,"cols":1,"entries":[[[1,2]]]})"), ParseError);
  EXPECT_THROW(bad(R"({"entries":[[1]]})"), ParseError);
  EXPECT_THROW(json_io::parse("{\"rows\":"), ParseError);
}

TEST(JsonCoefficients, GradedOrderAndRoundTrip) {
  RationalSampler rng(82);
  const auto a = rng.matrix(2, 2);
  const auto c = macmahon_per_coeffs(a, Alpha(Rational(2)), 3);
  const auto j = json_io::coefficients_to_json(c);
  ASSERT_EQ(j.size(), c.size());
  EXPECT_EQ(j[0]["n"], Json::array({0, 0}));
  EXPECT_EQ(j[1]["n"], Json::array({0, 1}));
  EXPECT_EQ(j[2]["n"], Json::array({1, 0}));
  for (std::size_t i = 1; i < j.size(); ++i) {
    const MultiIndex p(j[i - 1]["n"].get<std::vector<std::uint32_t>>());
    const MultiIndex q(j[i]["n"].get<std::vector<std::uint32_t>>());
    EXPECT_TRUE(GradedLess{}(p, q));
    EXPECT_TRUE(j[i]["value"].is_string());
  }
  EXPECT_EQ(json_io::coefficients_from_json<Rational>(j), c);
}

TEST(JsonPoly, RoundTrip) {
  const auto p = symmetric_det_poly(2) * Rational(-5, 3);
  const auto j = json_io::poly_to_json(p);
  EXPECT_EQ(j[0]["exp"], Json::array({0, 2, 0}));
  EXPECT_EQ(j[0]["coef"], "5/3");
  EXPECT_EQ(j[1]["coef"], "-5/3");
  EXPECT_EQ(json_io::poly_from_json(j), p);
  EXPECT_EQ(json_io::poly_from_json(Json::array(), 3), RSparsePoly(3));
  EXPECT_THROW(json_io::poly_from_json(Json::array()), ParseError);
}

TEST(JsonReports, CertificateAndWitness) {
  const auto inst = certify_hyperbolic(lorentz_poly(3), RVector{1, 0, 0}, 20, 4);
  const auto cj = json_io::to_json(inst.cert);
  EXPECT_EQ(cj["trials"], 20);
  EXPECT_EQ(cj["seed"], 4);
  EXPECT_EQ(cj["passed"], true);
  const auto back = json_io::certificate_from_json(cj);
  EXPECT_EQ(json_io::to_json(back).dump(), cj.dump());

  const auto out = find_witness<Rational>(Rational(3));
  ASSERT_TRUE(out.witness);
  const auto wj = json_io::witness_to_json(*out.witness);
  for (const char* key : {"alpha", "field", "m", "frame", "y", "gram", "n_index", "det_alpha_value", "verification"})
    EXPECT_TRUE(wj.contains(key)) << key;
  EXPECT_EQ(wj["verification"]["naive"], true);
  const auto w = json_io::witness_from_json<Rational>(wj);
  EXPECT_EQ(json_io::witness_to_json(w).dump(), wj.dump());
  EXPECT_THROW(json_io::witness_from_json<ComplexRational>(wj), ParseError);
}

}  // namespace
}  // namespace alphaperm
