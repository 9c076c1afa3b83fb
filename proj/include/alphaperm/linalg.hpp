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

#include <cstddef>
#include <utility>
#include <vector>

#include "alphaperm/error.hpp"
#include "alphaperm/matrix.hpp"
#include "alphaperm/unipoly.hpp"

namespace alphaperm {

// Exact linear algebra over the rationals and Gaussian rationals.

/// Determinant by Bareiss fraction-free elimination with row pivoting.
template <ExactScalar T>
T det_exact(const Matrix<T>& a) {
  if (!a.square()) throw ShapeError("det_exact: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  std::vector<T> m = a.data();
  auto at = [&](std::size_t i, std::size_t j) -> T& { return m[i * n + j]; };
  T prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(at(k, k))) {
      std::size_t p = k + 1;
      while (p < n && is_zero(at(p, k))) ++p;
      if (p == n) return T(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(p, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = at(k, k) * at(i, j) - at(i, k) * at(k, j);
        v /= prev;  // exact
        at(i, j) = std::move(v);
      }
      at(i, k) = T(0);
    }
    prev = at(k, k);
  }
  T d = at(n - 1, n - 1);
  return negate ? -d : d;
}

/// Rank by Gaussian elimination.
template <ExactScalar T>
std::size_t rank_exact(const Matrix<T>& a) {
  Matrix<T> m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const T inv = T(1) / m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return r;
}

/// Inverse by Gauss-Jordan elimination. Throws on singular input.
template <ExactScalar T>
Matrix<T> inverse_exact(const Matrix<T>& a) {
  if (!a.square()) throw ShapeError("inverse_exact: matrix is not square");
  const std::size_t n = a.rows();
  Matrix<T> m = a;
  Matrix<T> inv = Matrix<T>::identity(n);
  inv.clear_structure();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) throw PreconditionError("inverse_exact: matrix is singular");
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    const T piv = T(1) / m(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      m(c, j) *= piv;
      inv(c, j) *= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  if (a.flagged_selfadjoint()) inv.assert_structure(a.structure());
  return inv;
}

/// det(tI - A) by the Faddeev-LeVerrier recurrence.
template <ExactScalar T>
UniPoly<T> char_poly(const Matrix<T>& a) {
  if (!a.square()) throw ShapeError("char_poly: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<T> c(n + 1);
  c[n] = T(1);
  Matrix<T> m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Matrix<T> next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Matrix<T> am = a * m;
    T tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / T(static_cast<long>(k));
  }
  return UniPoly<T>(std::move(c));
}

/// Exact positive-semidefiniteness test for a flagged symmetric/hermitian
/// matrix. Writing det(tI - A) = t^n - c1 t^(n-1) + c2 t^(n-2) - ..., the
/// matrix is PSD iff every c_k >= 0.
template <ExactScalar T>
bool is_psd_exact(const Matrix<T>& a) {
  if (!a.square()) throw ShapeError("is_psd_exact: matrix is not square");
  if (!a.flagged_selfadjoint())
    throw PreconditionError("is_psd_exact: symmetric/hermitian flag not set");
  const std::size_t n = a.rows();
  const auto p = char_poly(a);
  for (std::size_t k = 1; k <= n; ++k) {
    const T coeff = p.coeff(n - k);
    if (!is_real(coeff)) throw std::logic_error("is_psd_exact: non-real characteristic coefficient");
    Rational ck = real_part(coeff);
    if (k % 2 == 1) ck = -ck;
    if (ck.sign() < 0) return false;
  }
  return true;
}

/// Checks det(I - AB) == det(I - BA) exactly.
template <ExactScalar T>
bool sylvester_check(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw ShapeError("sylvester_check: A must be m x n and B n x m");
  const auto lhs = det_exact(Matrix<T>::identity(a.rows()) - a * b);
  const auto rhs = det_exact(Matrix<T>::identity(b.rows()) - b * a);
  return lhs == rhs;
}

}  // namespace alphaperm
