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
#include <type_traits>

#include "alphaperm/complex_rational.hpp"
#include "alphaperm/rational.hpp"

namespace alphaperm {

/// Exact scalar fields supported throughout the library.
template <typename T>
concept ExactScalar = std::same_as<T, Rational> || std::same_as<T, ComplexRational>;

template <typename T>
inline constexpr bool is_complex_v = std::is_same_v<T, ComplexRational>;

inline Rational conj(const Rational& r) { return r; }
inline ComplexRational conj(const ComplexRational& z) { return z.conj(); }

inline const Rational& real_part(const Rational& r) { return r; }
inline const Rational& real_part(const ComplexRational& z) { return z.real(); }

inline bool is_real(const Rational&) { return true; }
inline bool is_real(const ComplexRational& z) { return z.is_real(); }

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const ComplexRational& z) { return z.is_zero(); }

template <ExactScalar T>
T scalar_pow(const T& base, unsigned long e) {
  T result(1);
  T b = base;
  while (e > 0) {
    if (e & 1UL) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

}  // namespace alphaperm
