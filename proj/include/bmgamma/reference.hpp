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

#ifndef BMGAMMA_REFERENCE_HPP
#define BMGAMMA_REFERENCE_HPP

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "bmgamma/errors.hpp"
#include "bmgamma/real.hpp"

#ifndef BMGAMMA_DEFAULT_REF_PATH
#define BMGAMMA_DEFAULT_REF_PATH "data/gamma_ref.txt"
#endif

namespace bmgamma {

/// Path of the Euler-constant digit file: $GAMMA_REF_PATH, else the bundled file.
inline std::string reference_gamma_path() {
  if (const char* env = std::getenv("GAMMA_REF_PATH"); env != nullptr && *env != '\0') return env;
  return BMGAMMA_DEFAULT_REF_PATH;
}

/// Reads a one-line "0.5772..." digit file. A single trailing newline is
/// allowed; anything else that is not a digit is rejected.
inline std::string load_reference_digits(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open reference digits file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  if (text.size() < 3 || text.compare(0, 2, "0.") != 0) {
    throw UsageError("reference file " + path + " must start with \"0.\"");
  }
  for (std::size_t i = 2; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw UsageError("reference file " + path + " has a non-digit at offset " + std::to_string(i));
    }
  }
  return text;
}

/// Euler's constant from the reference file, rounded to `bits`. Throws
/// PrecisionError when the file holds too few digits to back that precision.
inline Real reference_gamma(Bits bits, const std::string& path = reference_gamma_path()) {
  const std::string text = load_reference_digits(path);
  const auto decimals = static_cast<double>(text.size() - 2);
  if (decimals * 3.321928094887362 < static_cast<double>(bits) + 2.0) {
    throw PrecisionError("reference file " + path + " has " + std::to_string(text.size() - 2) +
                         " digits, not enough for " + std::to_string(bits) + " bits");
  }
  return Real::parse(text, bits);
}

}  // namespace bmgamma

#endif  // BMGAMMA_REFERENCE_HPP
