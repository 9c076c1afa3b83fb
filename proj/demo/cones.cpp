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

// Hyperbolicity certification, cone membership and a Garding check.

#include <iostream>

#include "alphaperm/hyperbolic.hpp"

using namespace alphaperm;

int main() {
  const auto lorentz = certify_hyperbolic(lorentz_poly(3), RVector{1, 0, 0}, 100, 7);
  std::cout << "x1^2 - x2^2 - x3^2 certified along (1,0,0): " << std::boolalpha << lorentz.certified() << "\n";
  for (const RVector& x : {RVector{2, 1, 1}, RVector{5, 3, 4}, RVector{-2, 0, 1}})
    std::cout << "  (" << x[0] << "," << x[1] << "," << x[2] << ") in cone: " << cone_member(lorentz, x) << "\n";

  // det over 2x2 symmetric matrices, flattened to (x11, x12, x22)
  const auto det2 = certify_hyperbolic(symmetric_det_poly(2), flatten_sym(RMatrix::identity(2)), 100, 7);
  std::cout << "det certified along I: " << det2.certified() << ", [[2,1],[1,1]] positive definite: "
            << cone_member(det2, RVector{2, 1, 1}) << "\n";

  const auto prod = certify_hyperbolic(elementary_symmetric_poly(4, 4), RVector(4, Rational(1)), 100, 7);
  const auto r = garding_lemma_test(prod, RVector{1, 2, 3, 4}, 100, 50, 7);
  std::cout << "D_v(x1 x2 x3 x4) for v = (1,2,3,4): hyperbolic " << r.derivative_cert.passed
            << ", cone containment failures " << r.containment_failures << " of " << r.points_checked << "\n";
}
