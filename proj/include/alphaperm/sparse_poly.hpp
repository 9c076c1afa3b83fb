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
#include <map>
#include <span>
#include <string>
#include <vector>

#include "alphaperm/error.hpp"
#include "alphaperm/multi_index.hpp"
#include "alphaperm/scalar_traits.hpp"
#include "alphaperm/unipoly.hpp"

namespace alphaperm {

/// Multivariate polynomial with exact coefficients. Zero coefficients are
/// never stored; terms are kept in lexicographic exponent order.
template <ExactScalar T>
class SparsePoly {
 public:
  using Terms = std::map<MultiIndex, T>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const T& c) {
    SparsePoly p(nvars);
    p.add_term(MultiIndex(nvars), c);
    return p;
  }
  static SparsePoly variable(std::size_t nvars, std::size_t i) {
    SparsePoly p(nvars);
    p.add_term(MultiIndex::unit(nvars, i), T(1));
    return p;
  }
  /// sum_i c_i x_i
  static SparsePoly linear(std::span<const T> c) {
    SparsePoly p(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) p.add_term(MultiIndex::unit(c.size(), i), c[i]);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  T coeff(const MultiIndex& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? T(0) : it->second;
  }

  void add_term(const MultiIndex& e, const T& c) {
    if (e.size() != nvars_) throw ShapeError("SparsePoly: exponent length differs from nvars");
    if (alphaperm::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (alphaperm::is_zero(it->second)) terms_.erase(it);
    }
  }

  /// Maximum total degree; -1 for the zero polynomial.
  long degree() const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e.total()));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.total();
    for (const auto& [e, c] : terms_)
      if (e.total() != d) return false;
    return true;
  }

  T operator()(std::span<const T> x) const {
    if (x.size() != nvars_) throw ShapeError("SparsePoly: point dimension differs from nvars");
    // cache powers per variable
    std::vector<std::vector<T>> pows(nvars_);
    T sum(0);
    for (const auto& [e, c] : terms_) {
      T term = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& pw = pows[i];
        if (pw.empty()) pw.push_back(T(1));
        while (pw.size() <= e[i]) pw.push_back(pw.back() * x[i]);
        term *= pw[e[i]];
      }
      sum += term;
    }
    return sum;
  }

  /// Partial derivative with respect to x_i.
  SparsePoly partial(std::size_t i) const {
    if (i >= nvars_) throw ShapeError("SparsePoly: variable index out of range");
    SparsePoly d(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[i] == 0) continue;
      MultiIndex f = e;
      f[i] -= 1;
      d.add_term(f, c * T(static_cast<long>(e[i])));
    }
    return d;
  }

  /// The univariate restriction t -> p(x + t e).
  UniPoly<T> restrict_to_line(std::span<const T> x, std::span<const T> dir) const {
    if (x.size() != nvars_ || dir.size() != nvars_)
      throw ShapeError("restrict_to_line: vector length differs from nvars");
    // (x_i + t e_i)^k expanded once per (i, k)
    std::vector<std::vector<UniPoly<T>>> factor(nvars_);
    UniPoly<T> result;
    for (const auto& [e, c] : terms_) {
      UniPoly<T> term{c};
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        auto& fi = factor[i];
        if (fi.empty()) fi.push_back(UniPoly<T>{T(1)});
        while (fi.size() <= e[i]) fi.push_back(fi.back() * UniPoly<T>{x[i], dir[i]});
        term *= fi[e[i]];
      }
      result += term;
    }
    return result;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  SparsePoly& operator+=(const SparsePoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePoly& operator-=(const SparsePoly& o) {
    check_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  SparsePoly& operator*=(const T& s) {
    if (alphaperm::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const T& s) { return a *= s; }
  friend SparsePoly operator*(const T& s, SparsePoly a) { return a *= s; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    a.check_vars(b);
    SparsePoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_vars(const SparsePoly& o) const {
    if (o.nvars_ != nvars_) throw ShapeError("SparsePoly: variable count mismatch");
  }
  std::size_t nvars_ = 0;
  Terms terms_;
};

using RSparsePoly = SparsePoly<Rational>;

}  // namespace alphaperm
