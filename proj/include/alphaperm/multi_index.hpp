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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <vector>

#include "alphaperm/error.hpp"
#include "alphaperm/rational.hpp"

namespace alphaperm {

/// Exponent vector n = (n_1, ..., n_m) of nonnegative integers.
class MultiIndex {
 public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t len) : parts_(len, 0) {}
  explicit MultiIndex(std::vector<value_type> parts) : parts_(std::move(parts)) {}
  MultiIndex(std::initializer_list<value_type> parts) : parts_(parts) {}

  static MultiIndex unit(std::size_t len, std::size_t i) {
    MultiIndex e(len);
    e.parts_.at(i) = 1;
    return e;
  }
  static MultiIndex ones(std::size_t len) { return MultiIndex(std::vector<value_type>(len, 1)); }

  std::size_t size() const { return parts_.size(); }
  value_type operator[](std::size_t i) const { return parts_[i]; }
  value_type& operator[](std::size_t i) { return parts_[i]; }
  const std::vector<value_type>& parts() const { return parts_; }

  /// |n|
  std::uint64_t total() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
  }
  /// n! = prod n_i!
  Rational factorial() const {
    Rational f(1);
    for (auto p : parts_) f *= alphaperm::factorial(p);
    return f;
  }

  MultiIndex operator+(const MultiIndex& o) const {
    check_len(o);
    MultiIndex r = *this;
    for (std::size_t i = 0; i < parts_.size(); ++i) r.parts_[i] += o.parts_[i];
    return r;
  }
  /// Componentwise a <= b.
  bool divides(const MultiIndex& o) const {
    check_len(o);
    for (std::size_t i = 0; i < parts_.size(); ++i)
      if (parts_[i] > o.parts_[i]) return false;
    return true;
  }
  MultiIndex operator-(const MultiIndex& o) const {
    if (!o.divides(*this)) throw PreconditionError("MultiIndex: negative difference");
    MultiIndex r = *this;
    for (std::size_t i = 0; i < parts_.size(); ++i) r.parts_[i] -= o.parts_[i];
    return r;
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Plain lexicographic order on the parts.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  void check_len(const MultiIndex& o) const {
    if (o.parts_.size() != parts_.size()) throw ShapeError("MultiIndex: length mismatch");
  }
  std::vector<value_type> parts_;
};

/// Graded order: total degree first, then lexicographic.
struct GradedLess {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const {
    const auto ta = a.total();
    const auto tb = b.total();
    if (ta != tb) return ta < tb;
    return a < b;
  }
};

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& n) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto p : n.parts()) {
      h ^= p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

/// Calls f on every MultiIndex of length `len` with total exactly `deg`,
/// in lexicographic order.
template <typename F>
void for_each_of_degree(std::size_t len, std::uint32_t deg, F&& f) {
  if (len == 0) {
    if (deg == 0) f(MultiIndex{});
    return;
  }
  MultiIndex cur(len);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == len) {
      cur[i] = left;
      f(static_cast<const MultiIndex&>(cur));
      return;
    }
    for (std::uint32_t v = 0; v <= left; ++v) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
  };
  rec(0, deg);
}

}  // namespace alphaperm
