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

#include <cstdint>
#include <random>
#include <vector>

#include "alphaperm/matrix.hpp"
#include "alphaperm/rational.hpp"

namespace alphaperm {

/// Deterministic sampler of small exact rationals. Uses only the raw engine
/// output, so streams are identical across standard libraries.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream for trial `index` of a run seeded with `seed`.
  static RationalSampler for_trial(std::uint64_t seed, std::uint64_t index) {
    return RationalSampler(splitmix64(seed ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
  }

  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// p/q with p uniform in [lo, hi] and q uniform in [1, max_den].
  Rational rational(long lo, long hi, long max_den) {
    const long p = integer(lo, hi);
    const long q = integer(1, max_den);
    return Rational(p, q);
  }

  /// p/q with 1 <= p, q <= bound.
  Rational positive(long bound = 100) { return Rational(integer(1, bound), integer(1, bound)); }

  /// Uniform rational in [lo, hi] on the grid with denominator `den`.
  Rational in_interval(const Rational& lo, const Rational& hi, long den = 1000) {
    const long k = integer(0, den);
    return lo + (hi - lo) * Rational(k, den);
  }

  std::vector<Rational> positive_vector(std::size_t n, long bound = 100) {
    std::vector<Rational> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(positive(bound));
    return v;
  }

  RMatrix matrix(std::size_t rows, std::size_t cols, long lo = -9, long hi = 9, long max_den = 5) {
    RMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(lo, hi, max_den);
    return m;
  }

  CMatrix complex_matrix(std::size_t rows, std::size_t cols, long lo = -9, long hi = 9,
                         long max_den = 5) {
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m(i, j) = ComplexRational(rational(lo, hi, max_den), rational(lo, hi, max_den));
    return m;
  }

  /// Exact PSD matrix V^* V for a random rows x n matrix V.
  template <ExactScalar T>
  Matrix<T> psd(std::size_t n, std::size_t rows) {
    Matrix<T> v;
    if constexpr (is_complex_v<T>)
      v = complex_matrix(rows, n, -5, 5, 3);
    else
      v = matrix(rows, n, -5, 5, 3);
    Matrix<T> g = v.adjoint() * v;
    g.assert_selfadjoint();
    return g;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace alphaperm
