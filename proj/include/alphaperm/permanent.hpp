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
#include <future>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "alphaperm/error.hpp"
#include "alphaperm/matrix.hpp"
#include "alphaperm/multi_index.hpp"

namespace alphaperm {

/// The weight parameter of alpha-permanents and alpha-determinants.
class Alpha {
 public:
  Alpha() = default;
  explicit Alpha(Rational v) : value_(std::move(v)) {}
  static Alpha parse(std::string_view s) { return Alpha(Rational::parse(s)); }

  const Rational& value() const { return value_; }

  /// m with alpha = -1/(m+1), m >= 0.
  std::optional<unsigned long> neg_reciprocal() const {
    if (value_.sign() >= 0 || value_.numerator() != -1) return std::nullopt;
    return value_.denominator().get_ui() - 1;
  }
  /// m with alpha = 1/(m+1), m >= 0.
  std::optional<unsigned long> pos_reciprocal() const {
    if (value_.sign() <= 0 || value_.numerator() != 1) return std::nullopt;
    return value_.denominator().get_ui() - 1;
  }
  /// m with alpha = 2/(m+1), m >= 0.
  std::optional<unsigned long> two_over() const {
    if (value_.sign() <= 0) return std::nullopt;
    const Rational q = Rational(2) / value_;
    if (!q.is_integer()) return std::nullopt;
    return q.numerator().get_ui() - 1;
  }

  friend bool operator==(const Alpha&, const Alpha&) = default;

 private:
  Rational value_{1};
};

/// Default enumeration limits for the factorial and exponential algorithms.
struct EnumerationBounds {
  std::size_t naive = 10;
  std::size_t ryser = 20;
};

/// Number of disjoint cycles of a permutation of {0, ..., n-1}.
inline std::size_t cycle_count(std::span<const std::size_t> sigma) {
  const std::size_t n = sigma.size();
  std::vector<char> seen(n, 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sigma[i] >= n) throw PreconditionError("cycle_count: not a permutation");
    if (seen[sigma[i]]) throw PreconditionError("cycle_count: not a permutation");
    seen[sigma[i]] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = sigma[j]) seen[j] = 1;
  }
  return cycles;
}

namespace detail {

// Unchecked variant for enumeration loops.
inline std::size_t cycle_count_unchecked(const std::vector<std::size_t>& sigma,
                                         std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = sigma[j]) seen[j] = 1;
  }
  return cycles;
}

// buckets[c] = sum over permutations with c cycles of prod a_{i sigma(i)},
// restricted to sigma(0) == first.
template <ExactScalar T>
std::vector<T> cycle_buckets_from(const Matrix<T>& a, std::size_t first) {
  const std::size_t n = a.rows();
  std::vector<T> buckets(n + 1);
  std::vector<std::size_t> sigma(n);
  std::vector<char> used(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<T> prefix(n + 1);
  prefix[0] = T(1);

  auto rec = [&](auto&& self, std::size_t row) -> void {
    if (row == n) {
      buckets[cycle_count_unchecked(sigma, seen)] += prefix[n];
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || is_zero(a(row, j))) continue;
      used[j] = 1;
      sigma[row] = j;
      prefix[row + 1] = prefix[row] * a(row, j);
      self(self, row + 1);
      used[j] = 0;
    }
  };
  if (is_zero(a(0, first))) return buckets;
  used[first] = 1;
  sigma[0] = first;
  prefix[1] = a(0, first);
  rec(rec, 1);
  return buckets;
}

// Sums of prod a_{i sigma(i)} grouped by cycle count c(sigma), c = 0..n.
template <ExactScalar T>
std::vector<T> cycle_buckets(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  std::vector<T> total(n + 1);
  if (n == 0) {
    total[0] = T(1);
    return total;
  }
  const bool parallel = n >= 8 && std::thread::hardware_concurrency() > 1;
  std::vector<std::vector<T>> parts(n);
  if (parallel) {
    std::vector<std::future<std::vector<T>>> jobs;
    jobs.reserve(n);
    for (std::size_t f = 0; f < n; ++f)
      jobs.push_back(std::async(std::launch::async, [&a, f] { return cycle_buckets_from(a, f); }));
    for (std::size_t f = 0; f < n; ++f) parts[f] = jobs[f].get();
  } else {
    for (std::size_t f = 0; f < n; ++f) parts[f] = cycle_buckets_from(a, f);
  }
  for (const auto& p : parts)
    for (std::size_t c = 0; c <= n; ++c) total[c] += p[c];
  return total;
}

template <ExactScalar T>
void require_square(const Matrix<T>& a, const char* op) {
  if (!a.square()) throw ShapeError(std::string(op) + ": matrix is not square");
}

template <ExactScalar T>
void require_bound(const Matrix<T>& a, std::size_t bound, const char* op) {
  if (a.rows() > bound)
    throw BoundError(std::string(op) + ": size " + std::to_string(a.rows()) +
                     " exceeds enumeration bound " + std::to_string(bound));
}

}  // namespace detail

/// Permanent by direct enumeration of the symmetric group.
template <ExactScalar T>
T per_naive(const Matrix<T>& a, std::size_t bound = EnumerationBounds{}.naive) {
  detail::require_square(a, "per_naive");
  detail::require_bound(a, bound, "per_naive");
  T sum(0);
  for (const auto& b : detail::cycle_buckets(a)) sum += b;
  return sum;
}

/// Ryser's inclusion-exclusion formula; subsets visited in Gray-code order
/// so each step adds or removes one column from the running row sums.
template <ExactScalar T>
T per_ryser(const Matrix<T>& a, std::size_t bound = EnumerationBounds{}.ryser) {
  detail::require_square(a, "per_ryser");
  detail::require_bound(a, bound, "per_ryser");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  std::vector<T> row_sums(n);
  T total(0);
  const std::uint64_t count = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < count; ++k) {
    const auto col = static_cast<std::size_t>(std::countr_zero(k));
    const std::uint64_t bit = std::uint64_t{1} << col;
    gray ^= bit;
    const bool added = (gray & bit) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added)
        row_sums[i] += a(i, col);
      else
        row_sums[i] -= a(i, col);
    }
    T prod(1);
    for (std::size_t i = 0; i < n && !is_zero(prod); ++i) prod *= row_sums[i];
    // sign (-1)^(n - |S|)
    const bool odd = ((n - static_cast<std::size_t>(std::popcount(gray))) & 1U) != 0;
    if (odd)
      total -= prod;
    else
      total += prod;
  }
  return total;
}

/// sum_sigma alpha^c(sigma) prod a_{i sigma(i)}.
template <ExactScalar T>
T per_alpha(const Matrix<T>& a, const Alpha& alpha, std::size_t bound = EnumerationBounds{}.naive) {
  detail::require_square(a, "per_alpha");
  detail::require_bound(a, bound, "per_alpha");
  const auto buckets = detail::cycle_buckets(a);
  const T w(alpha.value());
  T sum(0);
  for (std::size_t c = buckets.size(); c-- > 0;) {  // Horner in alpha
    sum *= w;
    sum += buckets[c];
  }
  return sum;
}

/// alpha^n per_{1/alpha}(A), expanded as sum_sigma alpha^(n - c(sigma)) prod
/// a_{i sigma(i)} so that alpha = 0 is defined (diagonal product).
template <ExactScalar T>
T det_alpha(const Matrix<T>& a, const Alpha& alpha, std::size_t bound = EnumerationBounds{}.naive) {
  detail::require_square(a, "det_alpha");
  detail::require_bound(a, bound, "det_alpha");
  const std::size_t n = a.rows();
  const auto buckets = detail::cycle_buckets(a);
  const T w(alpha.value());
  T sum(0);
  for (std::size_t c = 0; c <= n; ++c) {  // Horner in alpha over n - c
    sum *= w;
    sum += buckets[c];
  }
  return sum;
}

/// Block dilation A[n]: entry (i, j) becomes an n_i x n_j constant block.
template <ExactScalar T>
Matrix<T> dilate(const Matrix<T>& a, const MultiIndex& n) {
  detail::require_square(a, "dilate");
  if (n.size() != a.rows()) throw ShapeError("dilate: multi-index length differs from matrix size");
  std::vector<std::size_t> owner;
  owner.reserve(n.total());
  for (std::size_t i = 0; i < n.size(); ++i) owner.insert(owner.end(), n[i], i);
  const std::size_t big = owner.size();
  Matrix<T> d(big, big);
  for (std::size_t r = 0; r < big; ++r)
    for (std::size_t c = 0; c < big; ++c) d(r, c) = a(owner[r], owner[c]);
  if (a.flagged_selfadjoint()) d.assert_structure(a.structure());
  return d;
}

}  // namespace alphaperm
