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

// Permanents, alpha-permanents and the series identity on a small matrix.

#include <iostream>

#include "alphaperm/permanent.hpp"
#include "alphaperm/series.hpp"

using namespace alphaperm;

int main() {
  RMatrix a(3, 3);
  const long entries[3][3] = {{1, 2, 0}, {-1, 3, 1}, {2, 0, 1}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = Rational(entries[i][j]);

  std::cout << "per(A)       = " << per_ryser(a) << "\n";
  std::cout << "det(A)       = " << det_alpha(a, Alpha(Rational(-1))) << "\n";
  for (const char* s : {"1/2", "2", "-1/3"}) {
    const auto alpha = Alpha::parse(s);
    std::cout << "per_" << s << "(A) = " << per_alpha(a, alpha) << ",  det_" << s << "(A) = " << det_alpha(a, alpha)
              << "\n";
  }

  // coefficient of x^n in det(I - alpha X A)^(-1/alpha) is det_alpha(A[n]) / n!
  const Alpha alpha(Rational(2));
  const auto coeffs = macmahon_det_coeffs(a, alpha, 4);
  const MultiIndex n{2, 1, 1};
  std::cout << "series coeff at (2,1,1) times n! = " << coeffs.at(n) * n.factorial() << "\n";
  std::cout << "det_2 of the dilation A[(2,1,1)] = " << det_alpha(dilate(a, n), alpha) << "\n";
}
