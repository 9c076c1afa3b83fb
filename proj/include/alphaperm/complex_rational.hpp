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

#include <concepts>
#include <ostream>
#include <string>

#include "alphaperm/rational.hpp"

namespace alphaperm {

/// Gaussian rational re + i*im.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  ComplexRational(I re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexRational i() { return {Rational(0), Rational(1)}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  ComplexRational conj() const { return {re_, -im_}; }
  /// |z|^2
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  ComplexRational reciprocal() const {
    const Rational n = norm2();
    if (n.is_zero()) throw std::domain_error("ComplexRational: division by zero");
    return {re_ / n, -im_ / n};
  }

  ComplexRational operator-() const { return {-re_, -im_}; }
  ComplexRational& operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexRational& operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ComplexRational& operator*=(const ComplexRational& o) {
    if (o.im_.is_zero()) {
      re_ *= o.re_;
      im_ *= o.re_;
      return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
  }
  ComplexRational& operator/=(const ComplexRational& o) { return *this *= o.reciprocal(); }

  friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
  friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
  friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
  friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const {
    if (im_.is_zero()) return re_.to_string();
    return "(" + re_.to_string() + (im_.sign() < 0 ? "-" : "+") + abs(im_).to_string() + "i)";
  }
  friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
    return os << z.to_string();
  }

 private:
  Rational re_;
  Rational im_;
};

}  // namespace alphaperm
