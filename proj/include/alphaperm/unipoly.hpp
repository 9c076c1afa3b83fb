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
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "alphaperm/error.hpp"
#include "alphaperm/scalar_traits.hpp"

namespace alphaperm {

/// Dense univariate polynomial, coefficients in ascending degree.
/// The zero polynomial has no coefficients.
template <ExactScalar T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  UniPoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static UniPoly monomial(std::size_t deg, T coeff = T(1)) {
    std::vector<T> c(deg + 1);
    c[deg] = std::move(coeff);
    return UniPoly(std::move(c));
  }
  /// Product of (t - r) over the given roots.
  static UniPoly from_roots(std::span<const T> roots) {
    UniPoly p{T(1)};
    for (const auto& r : roots) p *= UniPoly{-r, T(1)};
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  const T& leading() const { return c_.back(); }

  T operator()(const T& t) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= t;
      acc += *it;
    }
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return UniPoly(std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return {};
    UniPoly m = *this;
    const T inv = T(1) / leading();
    for (auto& x : m.c_) x *= inv;
    return m;
  }

  UniPoly operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) { return *this += -o; }
  UniPoly& operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
      c_.clear();
      return *this;
    }
    std::vector<T> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (is_zero_scalar(c_[i])) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
  }
  UniPoly& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
  }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const T& s) { return a *= s; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division: returns (quotient, remainder).
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UniPoly: division by zero polynomial");
    UniPoly r = *this;
    if (r.degree() < d.degree()) return {UniPoly{}, r};
    std::vector<T> q(static_cast<std::size_t>(r.degree() - d.degree() + 1));
    const T inv = T(1) / d.leading();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - d.degree());
      const T f = r.leading() * inv;
      q[shift] = f;
      for (std::size_t k = 0; k < d.c_.size(); ++k) r.c_[k + shift] -= f * d.c_[k];
      // leading term cancels exactly
      r.c_.pop_back();
      r.trim();
    }
    return {UniPoly(std::move(q)), r};
  }

  /// Reverse coefficient order as a degree-`n` polynomial: t^n p(1/t).
  UniPoly reversed(std::size_t n) const {
    std::vector<T> r(n + 1);
    for (std::size_t k = 0; k < c_.size() && k <= n; ++k) r[n - k] = c_[k];
    return UniPoly(std::move(r));
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (is_zero_scalar(c_[k])) continue;
      if (!s.empty()) s += " + ";
      s += c_[k].to_string();
      if (k > 0) s += "*t^" + std::to_string(k);
    }
    return s;
  }

 private:
  static bool is_zero_scalar(const T& x) { return alphaperm::is_zero(x); }
  void trim() {
    while (!c_.empty() && is_zero_scalar(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using RPoly = UniPoly<Rational>;

/// Monic greatest common divisor.
template <ExactScalar T>
UniPoly<T> gcd(UniPoly<T> a, UniPoly<T> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// p / gcd(p, p'): same distinct roots, all simple.
inline RPoly squarefree_part(const RPoly& p) {
  if (p.is_zero()) throw PreconditionError("squarefree_part: zero polynomial");
  if (p.degree() == 0) return p.monic();
  return p.divmod(gcd(p, p.derivative())).first.monic();
}

namespace detail {

inline std::vector<RPoly> sturm_chain(const RPoly& p) {
  std::vector<RPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto r = chain[chain.size() - 2].divmod(chain.back()).second;
    chain.push_back(-r);
  }
  chain.pop_back();
  return chain;
}

inline int sign_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Sign of each chain member as t -> +inf (dir = +1) or -inf (dir = -1).
inline int variations_at_infinity(const std::vector<RPoly>& chain, int dir) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) {
    int sg = q.leading().sign();
    if (dir < 0 && (q.degree() % 2 == 1)) sg = -sg;
    s.push_back(sg);
  }
  return sign_changes(s);
}

inline int variations_at(const std::vector<RPoly>& chain, const Rational& t) {
  std::vector<int> s;
  s.reserve(chain.size());
  for (const auto& q : chain) s.push_back(q(t).sign());
  return sign_changes(s);
}

}  // namespace detail

/// Number of distinct real roots of p.
inline int count_distinct_real_roots(const RPoly& p) {
  const RPoly q = squarefree_part(p);
  if (q.degree() == 0) return 0;
  const auto chain = detail::sturm_chain(q);
  return detail::variations_at_infinity(chain, -1) - detail::variations_at_infinity(chain, +1);
}

/// True iff every complex root of p is real. Exact: Sturm count on the
/// squarefree part compared against its degree.
inline bool sturm_real_rooted(const RPoly& p) {
  if (p.is_zero()) throw PreconditionError("sturm_real_rooted: zero polynomial");
  const RPoly q = squarefree_part(p);
  return count_distinct_real_roots(q) == q.degree();
}

/// True iff every real root of p lies in (-inf, 0). A root at 0 counts as
/// a failure.
inline bool sturm_roots_all_negative(const RPoly& p) {
  if (p.is_zero()) throw PreconditionError("sturm_roots_all_negative: zero polynomial");
  if (p.coeff(0).is_zero()) return false;
  const RPoly q = squarefree_part(p);
  if (q.degree() == 0) return true;
  const auto chain = detail::sturm_chain(q);
  // q(0) != 0, so V(0) - V(+inf) counts roots in (0, +inf).
  return detail::variations_at(chain, Rational(0)) - detail::variations_at_infinity(chain, +1) == 0;
}

}  // namespace alphaperm
