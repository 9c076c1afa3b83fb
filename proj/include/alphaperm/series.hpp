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
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "alphaperm/error.hpp"
#include "alphaperm/linalg.hpp"
#include "alphaperm/matrix.hpp"
#include "alphaperm/multi_index.hpp"
#include "alphaperm/permanent.hpp"
#include "alphaperm/sparse_poly.hpp"

namespace alphaperm {

/// Coefficients keyed in graded order (total degree, then lexicographic).
template <ExactScalar T>
using CoefficientMap = std::map<MultiIndex, T, GradedLess>;

/// Multivariate power series truncated at total degree D, optionally also
/// to a coordinate box n <= cap. Stored as homogeneous layers; every ring
/// operation drops terms outside the truncation.
template <ExactScalar T>
class TruncatedSeries {
 public:
  using Layer = std::unordered_map<MultiIndex, T, MultiIndexHash>;

  TruncatedSeries(std::size_t nvars, std::uint32_t max_degree,
                  std::optional<MultiIndex> box = std::nullopt)
      : nvars_(nvars), max_degree_(max_degree), box_(std::move(box)), layers_(max_degree + 1) {
    if (box_ && box_->size() != nvars_) throw ShapeError("TruncatedSeries: box length differs from nvars");
  }

  static TruncatedSeries one(std::size_t nvars, std::uint32_t max_degree,
                             std::optional<MultiIndex> box = std::nullopt) {
    TruncatedSeries s(nvars, max_degree, std::move(box));
    s.add(MultiIndex(nvars), T(1));
    return s;
  }

  static TruncatedSeries from_poly(const SparsePoly<T>& p, std::uint32_t max_degree,
                                   std::optional<MultiIndex> box = std::nullopt) {
    TruncatedSeries s(p.nvars(), max_degree, std::move(box));
    for (const auto& [e, c] : p.terms()) s.add(e, c);
    return s;
  }

  std::size_t nvars() const { return nvars_; }
  std::uint32_t max_degree() const { return max_degree_; }
  const std::optional<MultiIndex>& box() const { return box_; }
  const Layer& layer(std::size_t k) const { return layers_.at(k); }

  bool admits(const MultiIndex& e) const {
    if (e.size() != nvars_) return false;
    if (e.total() > max_degree_) return false;
    return !box_ || e.divides(*box_);
  }

  /// Adds c x^e; silently dropped when outside the truncation.
  void add(const MultiIndex& e, const T& c) {
    if (e.size() != nvars_) throw ShapeError("TruncatedSeries: exponent length differs from nvars");
    if (!admits(e) || alphaperm::is_zero(c)) return;
    auto& layer = layers_[e.total()];
    auto [it, inserted] = layer.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (alphaperm::is_zero(it->second)) layer.erase(it);
    }
  }

  T coeff(const MultiIndex& e) const {
    if (!admits(e)) throw PreconditionError("TruncatedSeries: coefficient outside truncation");
    const auto& layer = layers_[e.total()];
    auto it = layer.find(e);
    return it == layer.end() ? T(0) : it->second;
  }
  T constant_term() const { return coeff(MultiIndex(nvars_)); }

  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& l : layers_) n += l.size();
    return n;
  }

  /// All stored terms in graded order.
  CoefficientMap<T> coefficients() const {
    CoefficientMap<T> out;
    for (const auto& l : layers_)
      for (const auto& [e, c] : l) out.emplace(e, c);
    return out;
  }

  /// Layer k as a graded-sorted vector.
  std::vector<std::pair<MultiIndex, T>> sorted_layer(std::size_t k) const {
    std::vector<std::pair<MultiIndex, T>> v(layers_.at(k).begin(), layers_.at(k).end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check_compatible(o);
    for (const auto& l : o.layers_)
      for (const auto& [e, c] : l) add(e, c);
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check_compatible(o);
    for (const auto& l : o.layers_)
      for (const auto& [e, c] : l) add(e, -c);
    return *this;
  }
  TruncatedSeries& operator*=(const T& s) {
    for (auto& l : layers_) {
      if (alphaperm::is_zero(s)) l.clear();
      for (auto& [e, c] : l) c *= s;
    }
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const T& s) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check_compatible(b);
    TruncatedSeries r(a.nvars_, a.max_degree_, a.box_);
    for (std::size_t i = 0; i <= a.max_degree_; ++i)
      for (std::size_t j = 0; i + j <= a.max_degree_; ++j)
        r.accumulate_product(i + j, a.layers_[i], b.layers_[j], T(1));
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.nvars_ == b.nvars_ && a.max_degree_ == b.max_degree_ && a.box_ == b.box_ &&
           a.layers_ == b.layers_;
  }

  /// log f for f with constant term 1. Graded recurrence from the Euler
  /// operator: k g_k = k f_k - sum_{j=1}^{k-1} j g_j f_{k-j}.
  TruncatedSeries log() const {
    if (!(constant_term() == T(1))) throw PreconditionError("series_log: constant term must be 1");
    TruncatedSeries g(nvars_, max_degree_, box_);
    for (std::size_t k = 1; k <= max_degree_; ++k) {
      for (const auto& [e, c] : layers_[k]) g.add(e, c);
      for (std::size_t j = 1; j < k; ++j)
        g.accumulate_product(k, g.layers_[j], layers_[k - j],
                             T(-static_cast<long>(j)) / T(static_cast<long>(k)));
    }
    return g;
  }

  /// exp u for u with zero constant term: k G_k = sum_{j=1}^k j u_j G_{k-j}.
  TruncatedSeries exp() const {
    if (!alphaperm::is_zero(constant_term()))
      throw PreconditionError("series_exp: constant term must be 0");
    TruncatedSeries g = one(nvars_, max_degree_, box_);
    for (std::size_t k = 1; k <= max_degree_; ++k)
      for (std::size_t j = 1; j <= k; ++j)
        g.accumulate_product(k, layers_[j], g.layers_[k - j],
                             T(static_cast<long>(j)) / T(static_cast<long>(k)));
    return g;
  }

  /// f^e for f with constant term 1 and rational e. Computed by the graded
  /// power recurrence k F_k = sum_{j=1}^k (e j - (k - j)) f_j F_{k-j},
  /// which agrees with exp(e log f) and only touches the nonzero layers of f.
  TruncatedSeries pow(const Rational& e) const {
    if (!(constant_term() == T(1))) throw PreconditionError("series_pow: constant term must be 1");
    TruncatedSeries g = one(nvars_, max_degree_, box_);
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 1; j <= max_degree_; ++j)
      if (!layers_[j].empty()) nonzero.push_back(j);
    for (std::size_t k = 1; k <= max_degree_; ++k) {
      const Rational inv_k = Rational(1) / Rational(static_cast<long>(k));
      for (std::size_t j : nonzero) {
        if (j > k) break;
        const Rational w = (e * Rational(static_cast<long>(j)) - Rational(static_cast<long>(k - j))) * inv_k;
        if (w.is_zero()) continue;
        g.accumulate_product(k, layers_[j], g.layers_[k - j], T(w));
      }
    }
    return g;
  }

 private:
  void check_compatible(const TruncatedSeries& o) const {
    if (o.nvars_ != nvars_ || o.max_degree_ != max_degree_ || o.box_ != box_)
      throw ShapeError("TruncatedSeries: incompatible truncations");
  }

  // layers_[k] += w * (a * b) where a, b are homogeneous of degrees summing to k.
  void accumulate_product(std::size_t k, const Layer& a, const Layer& b, const T& w) {
    if (a.empty() || b.empty()) return;
    // Iterate over the snapshot sizes; target layer k is distinct from a and b
    // unless one of them is degree 0, which callers never pass as the target.
    Layer& out = layers_[k];
    MultiIndex sum(nvars_);
    for (const auto& [ea, ca] : a) {
      const T wa = ca * w;
      for (const auto& [eb, cb] : b) {
        bool inside = true;
        for (std::size_t i = 0; i < nvars_; ++i) {
          sum[i] = ea[i] + eb[i];
          if (box_ && sum[i] > (*box_)[i]) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        auto [it, inserted] = out.try_emplace(sum, wa * cb);
        if (!inserted) it->second += wa * cb;
      }
    }
    std::erase_if(out, [](const auto& kv) { return alphaperm::is_zero(kv.second); });
  }

  std::size_t nvars_;
  std::uint32_t max_degree_;
  std::optional<MultiIndex> box_;
  std::vector<Layer> layers_;
};

/// Principal-minor enumeration cap for det(I - XA): at most 2^12 subsets.
inline constexpr std::size_t kDefaultMinorBound = std::size_t{1} << 12;

/// det(I - XA) with X = diag(x_1..x_m), expanded over principal minors:
/// sum_S (-1)^|S| det(A_S) prod_{i in S} x_i. Minors larger than rank(A)
/// vanish and are skipped.
template <ExactScalar T>
SparsePoly<T> det_I_minus_XA(const Matrix<T>& a, std::size_t minor_bound = kDefaultMinorBound) {
  if (!a.square()) throw ShapeError("det_I_minus_XA: matrix is not square");
  const std::size_t m = a.rows();
  const std::size_t r = rank_exact(a);
  // count subsets of size <= r
  Rational count(0);
  for (std::size_t k = 0; k <= r; ++k) count += binomial(m, k);
  if (count > Rational(static_cast<long>(minor_bound)))
    throw BoundError("det_I_minus_XA: " + count.to_string() + " principal minors exceed bound " +
                     std::to_string(minor_bound));
  SparsePoly<T> p(m);
  std::vector<std::size_t> idx;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    MultiIndex e(m);
    for (auto i : idx) e[i] = 1;
    T d = idx.empty() ? T(1) : det_exact(a.principal(idx));
    if (idx.size() % 2 == 1) d = -d;
    p.add_term(e, d);
    if (idx.size() == r) return;
    for (std::size_t i = start; i < m; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return p;
}

/// Coefficients of det(I - XA)^(-alpha) through total degree D; the value
/// at n equals per_alpha(A[n]) / n!.
template <ExactScalar T>
CoefficientMap<T> macmahon_per_coeffs(const Matrix<T>& a, const Alpha& alpha, std::uint32_t degree) {
  const auto f = TruncatedSeries<T>::from_poly(det_I_minus_XA(a), degree);
  return f.pow(-alpha.value()).coefficients();
}

/// Coefficients of det(I - alpha XA)^(-1/alpha) through total degree D; the
/// value at n equals det_alpha(A[n]) / n!. alpha = 0 is rejected.
template <ExactScalar T>
CoefficientMap<T> macmahon_det_coeffs(const Matrix<T>& a, const Alpha& alpha, std::uint32_t degree) {
  if (alpha.value().is_zero())
    throw PreconditionError("macmahon_det_coeffs: alpha = 0 is not supported");
  const auto f = TruncatedSeries<T>::from_poly(det_I_minus_XA(a * T(alpha.value())), degree);
  return f.pow(-alpha.value().reciprocal()).coefficients();
}

}  // namespace alphaperm
