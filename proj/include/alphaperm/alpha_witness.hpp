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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphaperm/error.hpp"
#include "alphaperm/linalg.hpp"
#include "alphaperm/permanent.hpp"
#include "alphaperm/random.hpp"
#include "alphaperm/series.hpp"

namespace alphaperm {

enum class Field { real, complex };

inline std::string_view to_string(Field f) { return f == Field::real ? "real" : "complex"; }

inline Field parse_field(std::string_view s) {
  if (s == "real") return Field::real;
  if (s == "complex") return Field::complex;
  throw ParseError("unknown field '" + std::string(s) + "' (expected real or complex)");
}

template <ExactScalar T>
inline constexpr Field field_of = is_complex_v<T> ? Field::complex : Field::real;

/// x in N or x >= m - 1.
inline bool C_contains(std::size_t m, const Rational& x) {
  if (m < 1) throw PreconditionError("C_contains: m must be at least 1");
  if (x.is_integer() && x.sign() >= 0) return true;
  return x >= Rational(static_cast<long>(m) - 1);
}

/// 2x in C(m).
inline bool R_contains(std::size_t m, const Rational& x) {
  if (m < 1) throw PreconditionError("R_contains: m must be at least 1");
  return C_contains(m, x * Rational(2));
}

enum class AlphaReason { zero, neg_reciprocal, two_over, pos_reciprocal, non_member };

inline std::string_view to_string(AlphaReason r) {
  switch (r) {
    case AlphaReason::zero: return "zero";
    case AlphaReason::neg_reciprocal: return "neg-reciprocal";
    case AlphaReason::two_over: return "two-over";
    case AlphaReason::pos_reciprocal: return "pos-reciprocal";
    case AlphaReason::non_member: return "non-member";
  }
  return "non-member";
}

/// Membership of alpha in the set of weights with det_alpha >= 0 on every
/// PSD matrix over the field, with the m of the matching family.
struct AlphaClass {
  Rational alpha;
  Field field = Field::real;
  bool member = false;
  AlphaReason reason = AlphaReason::non_member;
  std::optional<unsigned long> m;
  /// whether the older conjectured answer ({-1/(m+1)} u [0,2] real, [0,1] complex) includes alpha
  bool conjecture4_claimed = false;

  bool conjecture4_disagrees() const { return conjecture4_claimed != member; }
};

inline AlphaClass classify_alpha(const Rational& alpha, Field field) {
  AlphaClass c;
  c.alpha = alpha;
  c.field = field;
  const Alpha a(alpha);
  if (alpha.is_zero()) {
    c.reason = AlphaReason::zero;
  } else if (auto m = a.neg_reciprocal()) {
    c.reason = AlphaReason::neg_reciprocal;
    c.m = m;
  } else if (field == Field::real && (m = a.two_over())) {
    c.reason = AlphaReason::two_over;
    c.m = m;
  } else if (field == Field::complex && (m = a.pos_reciprocal())) {
    c.reason = AlphaReason::pos_reciprocal;
    c.m = m;
  }
  c.member = c.reason != AlphaReason::non_member;
  const Rational top = field == Field::real ? Rational(2) : Rational(1);
  c.conjecture4_claimed = a.neg_reciprocal().has_value() || (alpha.sign() >= 0 && alpha <= top);
  return c;
}

/// Smallest m with beta outside R(m) (real) or C(m) (complex).
inline std::size_t minimal_frame_dimension(const Rational& beta, Field field) {
  if (beta.sign() <= 0) throw PreconditionError("minimal_frame_dimension: beta must be positive");
  for (std::size_t m = 1;; ++m) {
    const bool inside = field == Field::real ? R_contains(m, beta) : C_contains(m, beta);
    if (!inside) return m;
    if (m > 4096) throw PreconditionError("minimal_frame_dimension: beta lies in every set");
  }
}

template <ExactScalar T>
using Frame = std::vector<std::vector<T>>;

namespace detail {

/// Real coordinates of v v^*: the upper triangle, plus imaginary parts above
/// the diagonal in the complex case.
template <ExactScalar T>
std::vector<Rational> flatten_outer(const std::vector<T>& v) {
  const std::size_t m = v.size();
  std::vector<Rational> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      const T e = v[i] * conj(v[j]);
      out.push_back(real_part(e));
      if constexpr (is_complex_v<T>)
        if (i != j) out.push_back(e.imag());
    }
  return out;
}

}  // namespace detail

/// e_i, e_i + e_j (i < j), and in the complex case e_i + i e_j. The outer
/// products span Sym(m) or Herm(m); the span is checked by exact rank.
template <ExactScalar T>
Frame<T> spanning_rank_one_frame(std::size_t m) {
  if (m < 1) throw PreconditionError("spanning_rank_one_frame: m must be at least 1");
  Frame<T> f;
  auto unit = [m](std::size_t i) {
    std::vector<T> v(m, T(0));
    v[i] = T(1);
    return v;
  };
  for (std::size_t i = 0; i < m; ++i) f.push_back(unit(i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      auto v = unit(i);
      v[j] = T(1);
      f.push_back(std::move(v));
    }
  if constexpr (is_complex_v<T>) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        auto v = unit(i);
        v[j] = ComplexRational::i();
        f.push_back(std::move(v));
      }
  }
  const std::size_t dim = is_complex_v<T> ? m * m : m * (m + 1) / 2;
  RMatrix flat(f.size(), dim);
  for (std::size_t r = 0; r < f.size(); ++r) {
    const auto coords = detail::flatten_outer(f[r]);
    for (std::size_t c = 0; c < dim; ++c) flat(r, c) = coords[c];
  }
  if (f.size() != dim || rank_exact(flat) != dim)
    throw PreconditionError("spanning_rank_one_frame: outer products do not span");
  return f;
}

/// A = sum_i y_i v_i v_i^*.
template <ExactScalar T>
Matrix<T> frame_operator(const Frame<T>& frame, std::span<const Rational> y) {
  if (frame.empty()) throw ShapeError("frame_operator: empty frame");
  if (y.size() != frame.size()) throw ShapeError("frame_operator: weight count differs from frame size");
  const std::size_t m = frame.front().size();
  Matrix<T> a(m, m);
  for (std::size_t k = 0; k < frame.size(); ++k) {
    if (y[k].sign() <= 0) throw PreconditionError("frame_operator: weights must be strictly positive");
    a = a + outer(std::span<const T>(frame[k])) * T(y[k]);
  }
  a.assert_selfadjoint();
  return a;
}

/// G_ij = v_i^* A^{-1} v_j, the Gram matrix of the vectors A^{-1/2} v_i.
template <ExactScalar T>
Matrix<T> witness_gram(const Frame<T>& frame, std::span<const Rational> y) {
  const auto a = frame_operator(frame, y);
  if (is_zero(det_exact(a))) throw PreconditionError("witness_gram: A is singular");
  const auto ai = inverse_exact(a);
  const std::size_t n = frame.size();
  const std::size_t m = a.rows();
  Matrix<T> g(n, n);
  std::vector<std::vector<T>> w(n, std::vector<T>(m));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) w[j][r] += ai(r, c) * frame[j][c];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T s(0);
      for (std::size_t r = 0; r < m; ++r) s += conj(frame[i][r]) * w[j][r];
      g(i, j) = s;
    }
  g.assert_selfadjoint();
  return g;
}

template <ExactScalar T>
Matrix<T> witness_gram(std::size_t m, std::span<const Rational> y) {
  return witness_gram(spanning_rank_one_frame<T>(m), y);
}

/// det(A - sum_i x_i v_i v_i^*) / det(A) as a polynomial in x, by cofactor
/// expansion of the m x m matrix of linear forms. Equal to det(I - XG).
template <ExactScalar T>
SparsePoly<T> reduced_det_poly(const Frame<T>& frame, std::span<const Rational> y) {
  const auto a = frame_operator(frame, y);
  const std::size_t m = a.rows();
  const std::size_t n = frame.size();
  std::vector<SparsePoly<T>> entries(m * m, SparsePoly<T>(n));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) {
      auto& p = entries[r * m + c];
      p.add_term(MultiIndex(n), a(r, c));
      for (std::size_t k = 0; k < n; ++k) p.add_term(MultiIndex::unit(n, k), -(frame[k][r] * conj(frame[k][c])));
    }
  auto rec = [&](auto&& self, std::size_t row, std::vector<std::size_t>& cols) -> SparsePoly<T> {
    if (cols.empty()) return SparsePoly<T>::constant(n, T(1));
    SparsePoly<T> sum(n);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const std::size_t c = cols[k];
      if (entries[row * m + c].is_zero()) continue;
      std::vector<std::size_t> rest = cols;
      rest.erase(rest.begin() + static_cast<long>(k));
      auto term = entries[row * m + c] * self(self, row + 1, rest);
      if (k % 2) sum -= term;
      else sum += term;
    }
    return sum;
  };
  std::vector<std::size_t> cols(m);
  for (std::size_t c = 0; c < m; ++c) cols[c] = c;
  return rec(rec, 0, cols) * T(det_exact(a).reciprocal());
}

// ---------------------------------------------------------------------------
// Witness search

struct WitnessSearchOptions {
  std::uint32_t max_degree = 12;
  std::size_t retries = 20;
  std::optional<std::vector<Rational>> y;  // first attempt's weights, default all ones
  std::uint64_t seed = 0;
  std::size_t term_budget = 2'000'000;  // series coefficients held at once
  double work_budget = 5e7;             // coefficient products per series expansion
  std::size_t naive_bound = 10;
  /// When positive, after the graded search fails, expand box-truncated
  /// series aligned with the dominant direction y_i G_ii up to this total degree.
  std::uint32_t escalate_to = 0;
};

struct WitnessVerification {
  bool series = false;                 // coefficient negative, value recomputed from it
  std::optional<bool> naive;           // naive det_alpha agrees and is negative; empty if skipped
  bool reduction = false;              // whole-box recomputation from det(A - sum x_i v_i v_i^*)
  bool psd = false;                    // is_psd_exact on G and G[n]
  bool series_verified_only() const { return !naive.has_value(); }
  bool ok() const { return series && reduction && psd && naive.value_or(true); }
};

template <ExactScalar T>
struct Witness {
  Rational alpha;
  std::size_t m = 0;
  Frame<T> frame;
  std::vector<Rational> y;
  Matrix<T> gram;
  MultiIndex n;
  Rational det_alpha_value;
  WitnessVerification verification;
  std::size_t attempt = 0;
  bool escalated = false;

  Matrix<T> dilated() const { return dilate(gram, n); }
};

struct SearchAttempt {
  std::size_t index = 0;
  bool escalation = false;
  std::uint32_t degree = 0;            // total degree fully expanded
  std::optional<MultiIndex> box;       // escalation boxes only
  std::size_t terms = 0;
  bool budget_limited = false;
  bool found = false;
};

struct WitnessSearchLog {
  Rational alpha;
  Field field = Field::real;
  Rational beta;
  std::size_t m = 0;
  std::size_t frame_size = 0;
  std::uint32_t max_degree = 0;
  std::uint32_t escalate_to = 0;
  std::size_t retries = 0;
  std::uint64_t seed = 0;
  std::vector<SearchAttempt> attempts;
};

template <ExactScalar T>
struct WitnessOutcome {
  std::optional<Witness<T>> witness;
  WitnessSearchLog log;
  bool exhausted() const { return !witness.has_value(); }
};

namespace detail {

inline double binomial_double(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

template <ExactScalar T>
std::optional<std::pair<MultiIndex, T>> first_negative(const TruncatedSeries<T>& s) {
  for (std::size_t k = 0; k <= s.max_degree(); ++k)
    for (auto& [e, c] : s.sorted_layer(k))
      if (real_part(c).sign() < 0) return std::make_pair(e, c);
  return std::nullopt;
}

template <ExactScalar T>
WitnessVerification verify_witness(const Frame<T>& frame, std::span<const Rational> y, const Matrix<T>& g,
                                   const MultiIndex& n, const T& coeff, const Rational& alpha,
                                   const Rational& value, std::size_t naive_bound) {
  WitnessVerification v;
  const Rational beta = alpha.reciprocal();
  v.series = is_real(coeff) && real_part(coeff).sign() < 0 && value.sign() < 0 &&
             value == scalar_pow(alpha, n.total()) * real_part(coeff) * n.factorial();
  // recompute in the box [0, n] from the cofactor-expanded polynomial
  const auto g_poly = reduced_det_poly(frame, y);
  v.reduction = g_poly == det_I_minus_XA(g) &&
                TruncatedSeries<T>::from_poly(g_poly, n.total(), n).pow(-beta).coeff(n) == coeff;
  const auto d = dilate(g, n);
  v.psd = is_psd_exact(g) && is_psd_exact(d);
  if (n.total() <= naive_bound) {
    const T per_b = per_alpha(d, Alpha(beta), naive_bound);
    const T det_a = det_alpha(d, Alpha(alpha), naive_bound);
    v.naive = is_real(det_a) && real_part(det_a) == value && per_b == coeff * T(n.factorial()) &&
              det_a == per_b * T(scalar_pow(alpha, n.total()));
  }
  return v;
}

}  // namespace detail

/// Searches for a PSD Gram matrix G and a multi-index n with det_alpha(G[n]) < 0
/// by expanding det(I - XG)^{-1/alpha} and scanning its coefficients in
/// graded-lex order. Attempt 0 uses `opts.y` (default all ones); attempt t > 0
/// draws weights p/q, p, q <= 100, from the stream (seed, t).
template <ExactScalar T>
WitnessOutcome<T> find_witness(const Rational& alpha, const WitnessSearchOptions& opts = {}) {
  constexpr Field field = field_of<T>;
  const auto cls = classify_alpha(alpha, field);
  if (cls.member) throw PreconditionError("find_witness: alpha is a member, no witness exists");
  if (alpha.sign() <= 0) throw PreconditionError("find_witness: alpha must be positive");
  if (opts.max_degree < 1) throw PreconditionError("find_witness: degree budget must be at least 1");

  WitnessOutcome<T> out;
  auto& log = out.log;
  log.alpha = alpha;
  log.field = field;
  log.beta = alpha.reciprocal();
  log.m = minimal_frame_dimension(log.beta, field);
  log.max_degree = opts.max_degree;
  log.escalate_to = opts.escalate_to;
  log.retries = opts.retries;
  log.seed = opts.seed;
  const auto frame = spanning_rank_one_frame<T>(log.m);
  const std::size_t nv = frame.size();
  log.frame_size = nv;
  if (opts.y && opts.y->size() != nv) throw ShapeError("find_witness: y length differs from frame size");

  auto weights = [&](std::size_t t) {
    if (t == 0) return opts.y.value_or(std::vector<Rational>(nv, Rational(1)));
    auto rng = RationalSampler::for_trial(opts.seed, t);
    return rng.positive_vector(nv);
  };

  auto conclude = [&](std::size_t t, const std::vector<Rational>& y, const Matrix<T>& g, const MultiIndex& n,
                      const T& c, bool escalated) {
    const Rational value = scalar_pow(alpha, n.total()) * real_part(c) * n.factorial();
    Witness<T> w{alpha, log.m, frame, y, g, n, value, {}, t, escalated};
    w.verification = detail::verify_witness(frame, std::span<const Rational>(y), g, n, c, alpha, value,
                                            opts.naive_bound);
    if (!w.verification.ok()) throw std::logic_error("find_witness: verification of a series witness failed");
    out.witness = std::move(w);
  };

  struct Prepared {
    std::vector<Rational> y;
    Matrix<T> g;
    SparsePoly<T> f;
  };
  auto prepare = [&](std::size_t t) {
    auto y = weights(t);
    auto g = witness_gram(frame, std::span<const Rational>(y));
    auto f = det_I_minus_XA(g);
    return Prepared{std::move(y), std::move(g), std::move(f)};
  };

  for (std::size_t t = 0; t <= opts.retries; ++t) {
    const auto p = prepare(t);
    SearchAttempt at;
    at.index = t;
    std::uint32_t d = opts.max_degree;
    const double fsize = static_cast<double>(p.f.size());
    while (d > 0 && (detail::binomial_double(nv + d, nv) > static_cast<double>(opts.term_budget) ||
                     detail::binomial_double(nv + d, nv) * fsize > opts.work_budget)) {
      --d;
      at.budget_limited = true;
    }
    at.degree = d;
    const auto s = TruncatedSeries<T>::from_poly(p.f, d).pow(-log.beta);
    at.terms = s.term_count();
    if (auto hit = detail::first_negative(s)) {
      at.found = true;
      log.attempts.push_back(at);
      conclude(t, p.y, p.g, hit->first, hit->second, false);
      return out;
    }
    log.attempts.push_back(at);
  }

  if (opts.escalate_to <= opts.max_degree) return out;
  for (std::size_t t = 0; t <= opts.retries; ++t) {
    const auto p = prepare(t);
    const double fsize = static_cast<double>(p.f.size());
    std::optional<MultiIndex> previous;
    for (std::uint32_t scale = 1;; ++scale) {
      MultiIndex box(nv);
      double cells = 1;
      for (std::size_t i = 0; i < nv; ++i) {
        const Rational target = p.y[i] * real_part(p.g(i, i)) * Rational(static_cast<long>(scale));
        mpz_class c;
        mpz_cdiv_q(c.get_mpz_t(), target.numerator().get_mpz_t(), target.denominator().get_mpz_t());
        box[i] = static_cast<std::uint32_t>(c.get_ui()) + 1;
        cells *= box[i] + 1.0;
      }
      if (box.total() > opts.escalate_to) break;
      SearchAttempt at;
      at.index = t;
      at.escalation = true;
      at.box = box;
      at.degree = box.total();
      if (cells > static_cast<double>(opts.term_budget) || cells * fsize > opts.work_budget) {
        at.budget_limited = true;
        log.attempts.push_back(at);
        break;
      }
      if (previous && *previous == box) continue;
      previous = box;
      const auto s = TruncatedSeries<T>::from_poly(p.f, box.total(), box).pow(-log.beta);
      at.terms = s.term_count();
      if (auto hit = detail::first_negative(s)) {
        at.found = true;
        log.attempts.push_back(at);
        conclude(t, p.y, p.g, hit->first, hit->second, true);
        return out;
      }
      log.attempts.push_back(at);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nonnegativity scan

struct NonnegativityReport {
  Rational alpha;
  Field field = Field::real;
  std::size_t samples = 0;
  std::size_t max_size = 0;
  std::size_t violations = 0;
  std::optional<Rational> min_value;
  std::uint64_t seed = 0;
};

/// Random exact PSD matrices (Gram matrices V^* V and dilations of smaller
/// ones) of size <= max_size; counts negative (or non-real) det_alpha values.
template <ExactScalar T>
NonnegativityReport nonnegativity_scan(const Rational& alpha, std::size_t max_size, std::size_t samples,
                                       std::uint64_t seed) {
  constexpr Field field = field_of<T>;
  if (!classify_alpha(alpha, field).member)
    throw PreconditionError("nonnegativity_scan: alpha is not a member");
  if (max_size < 1 || max_size > EnumerationBounds{}.naive)
    throw PreconditionError("nonnegativity_scan: max_size out of range");
  NonnegativityReport r{alpha, field, samples, max_size, 0, std::nullopt, seed};
  const Alpha a(alpha);
  for (std::size_t t = 0; t < samples; ++t) {
    auto rng = RationalSampler::for_trial(seed, t);
    const auto size = static_cast<std::size_t>(rng.integer(1, static_cast<long>(max_size)));
    Matrix<T> m;
    if (rng.integer(0, 1) == 0 || size == 1) {
      m = rng.psd<T>(size, static_cast<std::size_t>(rng.integer(1, static_cast<long>(size))));
    } else {
      const auto base = static_cast<std::size_t>(rng.integer(1, static_cast<long>(std::min<std::size_t>(size, 3))));
      MultiIndex n(base);
      for (std::size_t k = 0; k < size; ++k) n[static_cast<std::size_t>(rng.integer(0, static_cast<long>(base) - 1))] += 1;
      m = dilate(rng.psd<T>(base, static_cast<std::size_t>(rng.integer(1, static_cast<long>(base)))), n);
    }
    const T v = det_alpha(m, a);
    const bool bad = !is_real(v) || real_part(v).sign() < 0;
    if (bad) ++r.violations;
    if (!r.min_value || real_part(v) < *r.min_value) r.min_value = real_part(v);
  }
  return r;
}

}  // namespace alphaperm
