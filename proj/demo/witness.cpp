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

// Classify a few alpha values and build a PSD matrix with negative
// alpha-determinant for a non-member.

#include <iostream>

#include "alphaperm/alpha_witness.hpp"
#include "alphaperm/json_io.hpp"

using namespace alphaperm;

int main() {
  for (const auto& a : {Rational(2, 3), Rational(6, 5), Rational(5, 2)}) {
    const auto c = classify_alpha(a, Field::real);
    std::cout << "alpha " << a << ": member " << std::boolalpha << c.member << ", old conjecture claimed "
              << c.conjecture4_claimed << "\n";
  }

  WitnessSearchOptions opts;
  opts.seed = 1;
  const auto out = find_witness<Rational>(Rational(5, 2), opts);
  if (!out.witness) {
    std::cout << "no witness within the search budget\n";
    return 1;
  }
  const auto& w = *out.witness;
  std::cout << "Gram matrix G (" << w.gram.rows() << "x" << w.gram.cols() << ") is PSD; det_{5/2}(G[n]) = "
            << w.det_alpha_value << " for n = (";
  for (std::size_t i = 0; i < w.n.size(); ++i) std::cout << (i ? "," : "") << w.n[i];
  std::cout << ")\n" << json_io::dump(json_io::to_json(w.verification));
}
