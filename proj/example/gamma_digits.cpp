// Copyright 2026 The bmgamma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prints Euler's constant to 60 digits, then the remainder-expansion
// coefficients B_j that drive the error estimate.

#include <iostream>

#include "bmgamma.hpp"

int main() {
  const bmgamma::GammaResult r = bmgamma::compute_gamma(60);
  std::cout << "gamma = " << r.value << "\n"
            << "  x = " << r.x << ", " << r.precision_bits << " bits, |error| <= "
            << r.certified_abs_error.to_scientific(3) << "\n";

  const auto b = bmgamma::b_coeffs(bmgamma::kMaxBTerms);
  for (std::size_t j = 0; j < b.size(); ++j) std::cout << "B_" << j << " = " << b[j] << "\n";

  // Leading error made in K0(2x)/I0(2x) at the chosen x.
  std::cout << "truncation error ~ " << bmgamma::ratio_error_eval(r.x, 5, 64).to_scientific(6) << "\n";
}
