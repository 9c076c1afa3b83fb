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


#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "alphaperm/error.hpp"
#include "alphaperm/linalg.hpp"
#include "alphaperm/matrix.hpp"
#include "alphaperm/random.hpp"
#include "alphaperm/rational.hpp"
#include "alphaperm/sparse_poly.hpp"

namespace alphaperm {

using RVector = std::vector<Rational>;

inline constexpr std::size_t kDefaultCertifyTrials = 200;

/// D_v h = sum_i v_i dh/dx_i.
inline RSparsePoly directional_derivative(const RSparsePoly& h, std::span<const Rational> v) {
  if (v.size() != h.nvars()) throw ShapeError("directional_derivative: vector length differs from nvars");
  RSparsePoly d(h.nvars());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) d += h.partial(i) * v[i];
  return d;
}

namespace detail {

inline std::size_t homogeneous_degree(const RSparsePoly& h, const char* who) {
  if (h.is_zero()) throw PreconditionError(std::string(who) + ": zero polynomial");
  if (!h.is_homogeneous()) throw PreconditionError(std::string(who) + ": polynomial is not homogeneous");
  return static_cast<std::size_t>(h.degree());
}

inline RSparsePoly apply_derivatives(RSparsePoly h, std::span<const RVector> vs) {
  for (const auto& v : vs) h = directional_derivative(h, v);
  return h;
}

}  // namespace detail

/// Complete polarization H(v_1, ..., v_d) = D_{v_1} ... D_{v_d} h / d!.
inline Rational polarized_form(const RSparsePoly& h, std::span<const RVector> vs) {
  const std::size_t d = detail::homogeneous_degree(h, "polarized_form");
  if (vs.size() != d) throw PreconditionError("polarized_form: expected exactly deg(h) vectors");
  const auto c = detail::apply_derivatives(h, vs);
  return c.coeff(MultiIndex(h.nvars())) / factorial(d);
}

/// x -> H(b_1, ..., b_k, x, ..., x) as a form of degree d - k.
inline RSparsePoly partial_polarization(const RSparsePoly& h, std::span<const RVector> bs) {
  const std::size_t d = detail::homogeneous_degree(h, "partial_polarization");
  if (bs.size() >= d) throw PreconditionError("partial_polarization: need k < deg(h)");
  return detail::apply_derivatives(h, bs) * (factorial(d - bs.size()) / factorial(d));
}

/// Record of a sampled real-rootedness certification.
struct Certificate {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t lines_passed = 0;
  bool passed = false;
  std::optional<RVector> counterexample;
};

struct HyperbolicInstance {
  RSparsePoly h;
  RVector e;
  std::size_t degree = 0;
  Certificate cert;

  bool certified() const { return cert.passed; }
};

/// Samples `trials` lines x + t e and checks each restriction is real-rooted.
/// Stops at the first failing line and records it.
inline HyperbolicInstance certify_hyperbolic(const RSparsePoly& h, const RVector& e,
                                             std::size_t trials, std::uint64_t seed) {
  const std::size_t d = detail::homogeneous_degree(h, "certify_hyperbolic");
  if (e.size() != h.nvars()) throw ShapeError("certify_hyperbolic: direction length differs from nvars");
  if (h(e).is_zero()) throw PreconditionError("certify_hyperbolic: h(e) = 0");
  HyperbolicInstance inst{h, e, d, Certificate{trials, seed, 0, true, std::nullopt}};
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = RationalSampler::for_trial(seed, t);
    RVector x(h.nvars());
    for (auto& xi : x) xi = rng.rational(-10, 10, 10);
    if (!sturm_real_rooted(h.restrict_to_line(x, e))) {
      inst.cert.passed = false;
      inst.cert.counterexample = std::move(x);
      return inst;
    }
    ++inst.cert.lines_passed;
  }
  return inst;
}

/// x lies in the open cone iff every root of t -> h(x + t e) is negative.
inline bool cone_member(const HyperbolicInstance& inst, std::span<const Rational> x) {
  if (!inst.certified()) throw PreconditionError("cone_member: instance is not certified hyperbolic");
  if (x.size() != inst.h.nvars()) throw ShapeError("cone_member: point length differs from nvars");
  return sturm_roots_all_negative(inst.h.restrict_to_line(x, inst.e));
}

/// Rejection sample from the box e + [-radius, radius]^n until a cone point is hit.
inline RVector sample_cone_point(const HyperbolicInstance& inst, RationalSampler& rng,
                                 const Rational& radius = Rational(1), std::size_t max_tries = 1000) {
  RVector x(inst.e.size());
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = inst.e[i] + rng.in_interval(-radius, radius);
    if (cone_member(inst, x)) return x;
  }
  throw PreconditionError("sample_cone_point: rejection budget exhausted");
}

/// Mixed discriminant by inclusion-exclusion over subset sums.
template <ExactScalar T>
T mixed_discriminant(std::span<const Matrix<T>> mats) {
  const std::size_t n = mats.size();
  if (n == 0) throw ShapeError("mixed_discriminant: no matrices");
  for (const auto& a : mats)
    if (a.rows() != n || a.cols() != n) throw ShapeError("mixed_discriminant: need n matrices of size n x n");
  if (n > 20) throw BoundError("mixed_discriminant: too many subsets");
  T total(0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    Matrix<T> s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s = s + mats[i];
    const T d = det_exact(s);
    if ((n - static_cast<std::size_t>(std::popcount(mask))) % 2 == 0)
      total += d;
    else
      total -= d;
  }
  return total * T(factorial(n).reciprocal());
}

// Symmetric n x n matrices as vectors of their n(n+1)/2 upper entries, ordered
// row by row: (0,0), (0,1), ..., (0,n-1), (1,1), ...

inline std::size_t sym_dim(std::size_t n) { return n * (n + 1) / 2; }

inline std::size_t sym_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i - 1) / 2 + (j - i);
}

inline RVector flatten_sym(const RMatrix& a) {
  if (!a.square()) throw ShapeError("flatten_sym: matrix is not square");
  if (!a.is_symmetric()) throw PreconditionError("flatten_sym: matrix is not symmetric");
  const std::size_t n = a.rows();
  RVector x(sym_dim(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) x[sym_index(n, i, j)] = a(i, j);
  return x;
}

inline RMatrix unflatten_sym(std::size_t n, std::span<const Rational> x) {
  if (x.size() != sym_dim(n)) throw ShapeError("unflatten_sym: wrong vector length");
  RMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = x[sym_index(n, i, j)];
  a.assert_structure(Structure::symmetric);
  return a;
}

/// det of the generic symmetric matrix (x_ij) with x_ij = x_ji, homogeneous of degree n.
inline RSparsePoly symmetric_det_poly(std::size_t n) {
  if (n == 0 || n > 8) throw BoundError("symmetric_det_poly: size out of range");
  const std::size_t nv = sym_dim(n);
  RSparsePoly p(nv);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    MultiIndex e(nv);
    for (std::size_t i = 0; i < n; ++i) e[sym_index(n, i, perm[i])] += 1;
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    p.add_term(e, Rational(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return p;
}

inline RSparsePoly elementary_symmetric_poly(std::size_t n, std::size_t k) {
  if (k > n) throw PreconditionError("elementary_symmetric_poly: k > n");
  RSparsePoly p(n);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    MultiIndex e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = pick[i] ? 1 : 0;
    p.add_term(e, Rational(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return p;
}

/// x_1^2 - x_2^2 - ... - x_n^2
inline RSparsePoly lorentz_poly(std::size_t n) {
  if (n < 2) throw PreconditionError("lorentz_poly: need n >= 2");
  RSparsePoly p(n);
  for (std::size_t i = 0; i < n; ++i) {
    MultiIndex e(n);
    e[i] = 2;
    p.add_term(e, Rational(i == 0 ? 1 : -1));
  }
  return p;
}

struct GardingReport {
  bool passed = false;
  Certificate derivative_cert;
  std::size_t points_checked = 0;
  std::size_t containment_failures = 0;
  std::vector<RVector> witnesses;
};

/// Checks a candidate derivative g: g certifies hyperbolic along e and every
/// sampled point of the cone of `inst` lies in the cone of g.
inline GardingReport derivative_cone_test(const HyperbolicInstance& inst, const RSparsePoly& g,
                                          std::size_t trials, std::size_t points, std::uint64_t seed) {
  GardingReport r;
  const auto ginst = certify_hyperbolic(g, inst.e, trials, seed);
  r.derivative_cert = ginst.cert;
  if (!ginst.certified()) {
    r.witnesses.push_back(*ginst.cert.counterexample);
    return r;
  }
  auto rng = RationalSampler::for_trial(seed, trials);
  const Rational radius(1);
  for (std::size_t p = 0; p < points; ++p) {
    auto x = sample_cone_point(inst, rng, radius);
    ++r.points_checked;
    if (!cone_member(ginst, x)) {
      ++r.containment_failures;
      if (r.witnesses.size() < 8) r.witnesses.push_back(std::move(x));
    }
  }
  r.passed = r.containment_failures == 0;
  return r;
}

/// D_v h is hyperbolic along e and its cone contains the cone of h, for v in the cone.
inline GardingReport garding_lemma_test(const HyperbolicInstance& inst, const RVector& v,
                                        std::size_t trials, std::size_t points, std::uint64_t seed) {
  if (!cone_member(inst, v)) throw PreconditionError("garding_lemma_test: v is not in the cone");
  if (inst.degree < 2) throw PreconditionError("garding_lemma_test: degree must be at least 2");
  return derivative_cone_test(inst, directional_derivative(inst.h, v), trials, points, seed);
}

}  // namespace alphaperm
