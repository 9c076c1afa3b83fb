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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "alphaperm/error.hpp"
#include "alphaperm/scalar_traits.hpp"

namespace alphaperm {

/// Structural assertions carried alongside matrix data.
enum class Structure : unsigned { none = 0, symmetric = 1, hermitian = 2 };

/// Dense row-major matrix of exact scalars.
template <ExactScalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("Matrix: entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw ShapeError("Matrix: ragged initializer");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    m.flags_ = Structure::symmetric;
    if constexpr (is_complex_v<T>) m.flags_ = Structure::hermitian;
    return m;
  }

  /// Diagonal matrix from the given entries.
  static Matrix diagonal(std::span<const T> d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<T>& data() const { return data_; }

  Structure structure() const { return flags_; }
  bool flagged_symmetric() const { return flags_ == Structure::symmetric; }
  bool flagged_hermitian() const { return flags_ == Structure::hermitian; }
  /// True when either structural flag is set.
  bool flagged_selfadjoint() const { return flags_ != Structure::none; }

  bool is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i))) return false;
    return true;
  }

  bool is_hermitian() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (!is_real((*this)(i, i))) return false;
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == conj((*this)(j, i)))) return false;
    }
    return true;
  }

  /// Sets a structural flag after checking it holds exactly.
  Matrix& assert_structure(Structure s) {
    if (s == Structure::symmetric && !is_symmetric())
      throw PreconditionError("matrix is not symmetric");
    if (s == Structure::hermitian && !is_hermitian())
      throw PreconditionError("matrix is not hermitian");
    flags_ = s;
    return *this;
  }
  /// Flags the matrix symmetric (real) or hermitian (complex), checking first.
  Matrix& assert_selfadjoint() {
    return assert_structure(is_complex_v<T> ? Structure::hermitian : Structure::symmetric);
  }
  void clear_structure() { flags_ = Structure::none; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    t.flags_ = flags_ == Structure::symmetric ? flags_ : Structure::none;
    return t;
  }

  /// Conjugate transpose (plain transpose for real scalars).
  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
    t.flags_ = flags_;
    return t;
  }

  /// Principal submatrix on the given (sorted or unsorted) index set.
  Matrix principal(std::span<const std::size_t> idx) const {
    Matrix s(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) s(a, b) = (*this)(idx[a], idx[b]);
    s.flags_ = flags_;
    return s;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    if (flags_ != o.flags_) flags_ = Structure::none;
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    if (flags_ != o.flags_) flags_ = Structure::none;
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    if (!is_real(s) && flags_ == Structure::hermitian) flags_ = Structure::none;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeError("Matrix product: inner dimensions differ");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  /// Entrywise equality; structural flags are ignored.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
  Structure flags_ = Structure::none;
};

using RMatrix = Matrix<Rational>;
using CMatrix = Matrix<ComplexRational>;

template <ExactScalar T>
using Vector = std::vector<T>;

/// Column matrix from a vector.
template <ExactScalar T>
Matrix<T> column(std::span<const T> v) {
  return Matrix<T>(v.size(), 1, std::vector<T>(v.begin(), v.end()));
}

/// Outer product v v^* (flagged self-adjoint).
template <ExactScalar T>
Matrix<T> outer(std::span<const T> v) {
  Matrix<T> m(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * conj(v[j]);
  m.assert_selfadjoint();
  return m;
}

inline CMatrix to_complex(const RMatrix& a) {
  CMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = ComplexRational(a(i, j));
  if (a.flagged_symmetric()) c.assert_structure(Structure::hermitian);
  return c;
}

}  // namespace alphaperm
