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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

#include "alphaperm/error.hpp"
#include "alphaperm/hyperbolic.hpp"
#include "alphaperm/permanent.hpp"
#include "alphaperm/random.hpp"

namespace alphaperm {

enum class QuotientMode { bapat, hyperbolic, mixed_discriminant };

/// Fixed data of the quotient
///   x -> H(b_1, ..., b_k, x, ..., x) / H(b_0, b_1, ..., b_k, x, ..., x).
/// In bapat mode H is the permanent of the column matrix; in the other modes
/// it is the polarization of `inst.h`. Mixed-discriminant mode lives on
/// flattened symmetric matrices. `inverted` flips the quotient (a control
/// that should fail concavity).
struct QuotientSpec {
  QuotientMode mode = QuotientMode::bapat;
  std::size_t nvars = 0;
  std::vector<RVector> fixed;  // b_0, ..., b_k
  std::optional<HyperbolicInstance> inst;
  RSparsePoly numerator;    // polarization modes only
  RSparsePoly denominator;
  bool inverted = false;
  Rational sample_radius{1};

  std::size_t k() const { return fixed.size() - 1; }

  static QuotientSpec bapat(std::vector<RVector> b) {
    if (b.empty()) throw PreconditionError("QuotientSpec: need at least b_0");
    const std::size_t n = b.front().size();
    if (b.size() > n) throw PreconditionError("QuotientSpec: need k < n");
    for (const auto& v : b) {
      if (v.size() != n) throw ShapeError("QuotientSpec: fixed vectors differ in length");
      if (std::any_of(v.begin(), v.end(), [](const Rational& c) { return c.sign() <= 0; }))
        throw PreconditionError("QuotientSpec: bapat vectors must be strictly positive");
    }
    QuotientSpec s;
    s.nvars = n;
    s.fixed = std::move(b);
    return s;
  }

  static QuotientSpec hyperbolic(HyperbolicInstance inst, std::vector<RVector> b) {
    if (b.empty()) throw PreconditionError("QuotientSpec: need at least b_0");
    if (b.size() > inst.degree) throw PreconditionError("QuotientSpec: need k < deg(h)");
    for (const auto& v : b)
      if (!cone_member(inst, v)) throw PreconditionError("QuotientSpec: fixed vector outside the cone");
    QuotientSpec s;
    s.mode = QuotientMode::hyperbolic;
    s.nvars = inst.h.nvars();
    std::span<const RVector> all(b);
    s.numerator = partial_polarization(inst.h, all.subspan(1));
    s.denominator = partial_polarization(inst.h, all);
    s.fixed = std::move(b);
    s.inst = std::move(inst);
    return s;
  }

  /// Mixed discriminant quotient over positive definite A_0, ..., A_k.
  static QuotientSpec mixed_discriminant(std::span<const RMatrix> a, std::size_t trials, std::uint64_t seed) {
    if (a.empty()) throw PreconditionError("QuotientSpec: need at least A_0");
    const std::size_t n = a.front().rows();
    auto inst = certify_hyperbolic(symmetric_det_poly(n), flatten_sym(RMatrix::identity(n)), trials, seed);
    if (!inst.certified()) throw PreconditionError("QuotientSpec: determinant failed certification");
    std::vector<RVector> b;
    for (const auto& m : a) {
      if (m.rows() != n || !m.square()) throw ShapeError("QuotientSpec: matrices differ in size");
      b.push_back(flatten_sym(m));
    }
    auto s = hyperbolic(std::move(inst), std::move(b));
    s.mode = QuotientMode::mixed_discriminant;
    return s;
  }
};

namespace detail {

inline RMatrix column_matrix(std::span<const RVector> head, const RVector& x, std::size_t n) {
  RMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const RVector& c = j < head.size() ? head[j] : x;
    for (std::size_t i = 0; i < n; ++i) m(i, j) = c[i];
  }
  return m;
}

inline Rational finish_quotient(const Rational& num, const Rational& den, bool inverted) {
  const Rational& bottom = inverted ? num : den;
  if (bottom.is_zero()) throw PreconditionError("quotient: zero denominator");
  return inverted ? den / num : num / den;
}

}  // namespace detail

/// per(b_1..b_k, x..x) / per(b_0, b_1..b_k, x..x).
inline Rational bapat_quotient(const QuotientSpec& spec, std::span<const Rational> x) {
  if (spec.mode != QuotientMode::bapat) throw PreconditionError("bapat_quotient: spec is not in bapat mode");
  if (x.size() != spec.nvars) throw ShapeError("bapat_quotient: point length differs from n");
  if (std::any_of(x.begin(), x.end(), [](const Rational& c) { return c.sign() <= 0; }))
    throw PreconditionError("bapat_quotient: x must be strictly positive");
  const RVector xv(x.begin(), x.end());
  std::span<const RVector> all(spec.fixed);
  const Rational num = per_ryser(detail::column_matrix(all.subspan(1), xv, spec.nvars));
  const Rational den = per_ryser(detail::column_matrix(all, xv, spec.nvars));
  return detail::finish_quotient(num, den, spec.inverted);
}

inline Rational hyperbolic_quotient(const QuotientSpec& spec, std::span<const Rational> x) {
  if (spec.mode == QuotientMode::bapat || !spec.inst)
    throw PreconditionError("hyperbolic_quotient: spec has no hyperbolic polynomial");
  if (!cone_member(*spec.inst, x)) throw PreconditionError("hyperbolic_quotient: x outside the cone");
  return detail::finish_quotient(spec.numerator(x), spec.denominator(x), spec.inverted);
}

inline Rational evaluate_quotient(const QuotientSpec& spec, std::span<const Rational> x) {
  return spec.mode == QuotientMode::bapat ? bapat_quotient(spec, x) : hyperbolic_quotient(spec, x);
}

inline Rational elementary_symmetric(std::size_t k, std::span<const Rational> x) {
  if (k > x.size()) throw PreconditionError("elementary_symmetric: k exceeds n");
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = Rational(1);
  for (const auto& xi : x)
    for (std::size_t j = k; j >= 1; --j) e[j] += e[j - 1] * xi;
  return e[k];
}

/// A random point of the quotient's domain; the positive orthant uses p/q with p, q <= 100.
inline RVector sample_domain_point(const QuotientSpec& spec, RationalSampler& rng) {
  if (spec.mode == QuotientMode::bapat) return rng.positive_vector(spec.nvars);
  return sample_cone_point(*spec.inst, rng, spec.sample_radius);
}

struct ConcavityViolation {
  RVector x;
  RVector y;
  Rational margin;
};

struct ConcavityReport {
  std::size_t trials = 0;
  std::size_t violations = 0;
  std::optional<Rational> worst_margin;
  std::uint64_t seed = 0;
  std::vector<ConcavityViolation> witnesses;
};

/// Exact check of f((x+y)/2) >= (f(x)+f(y))/2 on random pairs.
inline ConcavityReport midpoint_concavity_scan(const QuotientSpec& spec, std::size_t samples,
                                               std::uint64_t seed, std::size_t keep_witnesses = 8) {
  ConcavityReport r;
  r.trials = samples;
  r.seed = seed;
  const Rational half(1, 2);
  for (std::size_t t = 0; t < samples; ++t) {
    auto rng = RationalSampler::for_trial(seed, t);
    RVector x = sample_domain_point(spec, rng);
    RVector y = sample_domain_point(spec, rng);
    RVector mid(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) mid[i] = (x[i] + y[i]) * half;
    const Rational margin =
        evaluate_quotient(spec, mid) - (evaluate_quotient(spec, x) + evaluate_quotient(spec, y)) * half;
    if (!r.worst_margin || margin < *r.worst_margin) r.worst_margin = margin;
    if (margin.sign() < 0) {
      ++r.violations;
      if (r.witnesses.size() < keep_witnesses) r.witnesses.push_back({std::move(x), std::move(y), margin});
    }
  }
  return r;
}

struct HessianReport {
  std::size_t points = 0;
  double tol = 0;
  double max_scaled_eigenvalue = 0;
  std::size_t violations = 0;
  std::uint64_t seed = 0;
};

inline constexpr double kHessianRelativeStep = 1e-4;
inline constexpr double kHessianTolerance = 1e-6;

/// Largest Hessian eigenvalue of f at x by central differences, divided by
/// the scale |f(x)| / |x|^2.
inline double scaled_hessian_max_eigenvalue(const std::function<double(std::span<const double>)>& f,
                                            std::span<const double> x,
                                            double rel_step = kHessianRelativeStep) {
  const std::size_t n = x.size();
  double xnorm = 0;
  for (double v : x) xnorm = std::max(xnorm, std::abs(v));
  if (xnorm == 0) throw PreconditionError("hessian: point at the origin");
  const double h = rel_step * xnorm;
  std::vector<double> p(x.begin(), x.end());
  auto at = [&](std::size_t i, double di, std::size_t j, double dj) {
    p[i] += di;
    p[j] += dj;
    const double v = f(p);
    p[i] -= di;
    p[j] -= dj;
    return v;
  };
  const double f0 = f(p);
  Eigen::MatrixXd hess(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    hess(i, i) = (at(i, h, i, 0) - 2 * f0 + at(i, -h, i, 0)) / (h * h);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) / (4 * h * h);
      hess(i, j) = hess(j, i) = v;
    }
  }
  double sq = 0;
  for (double v : x) sq += v * v;
  const double scale = std::max(std::abs(f0), 1e-300) / sq;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff() / scale;
}

/// Float corroboration of concavity for an arbitrary function and point sampler.
inline HessianReport hessian_nsd_check(const std::function<double(std::span<const double>)>& f,
                                       const std::function<std::vector<double>(RationalSampler&)>& sample,
                                       std::size_t points, double tol, std::uint64_t seed) {
  HessianReport r;
  r.points = points;
  r.tol = tol;
  r.seed = seed;
  r.max_scaled_eigenvalue = -std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < points; ++t) {
    auto rng = RationalSampler::for_trial(seed, t);
    const auto x = sample(rng);
    const double lam = scaled_hessian_max_eigenvalue(f, x);
    r.max_scaled_eigenvalue = std::max(r.max_scaled_eigenvalue, lam);
    if (lam > tol) ++r.violations;
  }
  return r;
}

/// The quotient is evaluated exactly at the (exactly representable) perturbed
/// points and rounded, so only the differencing is done in floating point.
inline HessianReport hessian_nsd_check(const QuotientSpec& spec, std::size_t points,
                                       double tol = kHessianTolerance, std::uint64_t seed = 0) {
  auto f = [&spec](std::span<const double> p) {
    RVector q;
    q.reserve(p.size());
    for (double v : p) q.emplace_back(mpq_class(v));
    return evaluate_quotient(spec, q).to_double();
  };
  auto sample = [&spec](RationalSampler& rng) {
    const auto x = sample_domain_point(spec, rng);
    std::vector<double> d;
    for (const auto& v : x) d.push_back(v.to_double());
    return d;
  };
  return hessian_nsd_check(f, sample, points, tol, seed);
}

}  // namespace alphaperm
