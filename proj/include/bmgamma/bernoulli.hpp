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

#ifndef BMGAMMA_BERNOULLI_HPP
#define BMGAMMA_BERNOULLI_HPP

#include <cstddef>
#include <mutex>
#include <vector>

#include "bmgamma/rational.hpp"

namespace bmgamma {

/// Bernoulli number B_n with B_1 = -1/2, from sum_{k=0}^{n} C(n+1, k) B_k = 0.
/// Values are memoized process-wide; the table only ever grows.
inline Rational bernoulli(unsigned n) {
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard<std::mutex> lock(mutex);
  while (table.size() <= n) {
    const unsigned m = static_cast<unsigned>(table.size());
    Rational acc;
    for (unsigned k = 0; k < m; ++k) {
      if (k > 1 && (k & 1u)) continue;  // odd B_k vanish for k >= 3
      acc += Rational(binomial(m + 1, k)) * table[k];
    }
    table.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return table[n];
}

/// Bernoulli polynomial B_n(h) = sum_k C(n, k) B_k h^(n-k).
inline Rational bernoulli_polynomial(unsigned n, const Rational& h) {
  Rational acc;
  for (unsigned k = 0; k <= n; ++k) {
    acc += Rational(binomial(n, k)) * bernoulli(k) * pow(h, static_cast<long>(n - k));
  }
  return acc;
}

}  // namespace bmgamma

#endif  // BMGAMMA_BERNOULLI_HPP
