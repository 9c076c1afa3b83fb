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

// Independent reference implementations used only by the test suites.

#include <algorithm>
#include <numeric>
#include <vector>

#include "alphaperm/matrix.hpp"
#include "alphaperm/multi_index.hpp"

namespace alphaperm::oracle {

/// Laplace expansion along the first row.
template <ExactScalar T>
T det_cofactor(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  if (n == 1) return a(0, 0);
  T sum(0);
  for (std::size_t j = 0; j < n; ++j) {
    Matrix<T> minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    T term = a(0, j) * det_cofactor(minor);
    if (j % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

/// Sum of all k x k principal minors.
template <ExactScalar T>
T principal_minor_sum(const Matrix<T>& a, std::size_t k) {
  const std::size_t n = a.rows();
  T sum(0);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) idx.push_back(i);
    sum += det_cofactor(a.principal(idx));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return sum;
}

/// Cycle count by explicit orbit listing (independent of the library loop).
inline std::size_t cycles_of(const std::vector<std::size_t>& p) {
  std::vector<std::vector<std::size_t>> orbits;
  std::vector<bool> placed(p.size(), false);
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (placed[s]) continue;
    std::vector<std::size_t> orbit{s};
    placed[s] = true;
    for (std::size_t j = p[s]; j != s; j = p[j]) {
      orbit.push_back(j);
      placed[j] = true;
    }
    orbits.push_back(orbit);
  }
  return orbits.size();
}

/// Sum over permutations of w^{c(sigma)} prod a_{i sigma(i)} via
/// std::next_permutation, with the weight power taken explicitly.
template <ExactScalar T>
T weighted_permutation_sum(const Matrix<T>& a, const T& w, bool exponent_is_n_minus_c = false) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T sum(0);
  do {
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term *= a(i, p[i]);
    const std::size_t c = cycles_of(p);
    const std::size_t e = exponent_is_n_minus_c ? n - c : c;
    for (std::size_t k = 0; k < e; ++k) term *= w;
    sum += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return sum;
}

/// Rising factorial a (a+1) ... (a+n-1).
inline Rational rising(const Rational& a, unsigned n) {
  Rational r(1);
  for (unsigned k = 0; k < n; ++k) r *= a + Rational(static_cast<long>(k));
  return r;
}

}  // namespace alphaperm::oracle
