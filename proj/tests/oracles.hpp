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

// Independent oracles shared by the test suites. Nothing here calls into the
// code paths under test: logs come from an exact atanh series, constants are
// frozen 50-digit values from a separate multiprecision package.

#ifndef BMGAMMA_TESTS_ORACLES_HPP
#define BMGAMMA_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include "bmgamma.hpp"

namespace oracle {

using bmgamma::Bits;
using bmgamma::Rational;
using bmgamma::Real;

// 50 significant digits.
inline constexpr const char* kI0At2 = "2.2795853023360672674372044408115333532858411027855";
inline constexpr const char* kK0At2 = "0.11389387274953343565271957493248183299832662438881";
inline constexpr const char* kI0K0At2 = "0.25963079834597074986427870353602276001692788733839";
inline constexpr const char* kS0At2 = "1.4297062187372083131867465655452809577372778968399";
inline constexpr const char* kS0At6 = "112.67454264718759683596108861655402540927812440489";
inline constexpr const char* kK0At6 = "0.0012439943280131230852324692600884413970956319070622";
inline constexpr const char* kK0At50 = "3.4101677497894955139206755123529522318450253776233e-23";
inline constexpr const char* kE1At10 = "4.1569689296853242774028598102781803843462900824195e-6";
inline constexpr const char* kLn2 = "0.69314718055994530941723212145817656807550013436026";
inline constexpr const char* kLn50 = "3.9120230054281460586187507879105518471267028428973";
inline constexpr const char* kLn7Over5 = "0.33647223662121293050459341021699209011148337531334";
inline constexpr const char* kT100At100 = "2.7696651570140436880229053029233538692400738621411e-89";
inline constexpr const char* kGamma60 = "0.577215664901532860606512090082402431042159335939923598805767";

inline Real parse(const char* text, Bits bits = 256) { return Real::parse(text, bits); }

/// |a - b| / |b|.
inline double rel_diff(const Real& a, const Real& b) {
  const Bits p = std::max(a.precision(), b.precision());
  const Real d = bmgamma::abs(a.rounded(p) - b.rounded(p));
  if (b.is_zero()) return d.to_double();
  return (d / bmgamma::abs(b.rounded(p))).to_double();
}

/// log2 of the relative difference, -inf style large negative if equal.
inline double rel_bits(const Real& a, const Real& b) {
  const double r = rel_diff(a, b);
  return r == 0.0 ? -1e9 : std::log2(r);
}

/// ln q for positive rational q from 2 atanh((q-1)/(q+1)), summed exactly
/// until the geometric tail drops under 2^-(bits+16). Far from 1 the
/// argument is first scaled by 2^-k and k ln 2 = 2k atanh(1/3) added back.
inline Rational atanh_sum(const Rational& y, Bits bits) {
  const Rational y2 = y * y;
  Rational term = y;
  Rational sum;
  const Rational eps = bmgamma::pow(Rational(2), -static_cast<long>(bits) - 16);
  const Rational tail_factor = Rational(1) / (Rational(1) - y2);
  for (long k = 0;; ++k) {
    sum += term / Rational(2 * k + 1);
    term *= y2;
    if (bmgamma::abs(term) * tail_factor < eps) break;
  }
  return sum;
}

inline Real ln_atanh(const Rational& q, Bits bits) {
  const long k = std::lround(std::log2(q.to_double()));
  const Rational reduced = q * bmgamma::pow(Rational(2), -k);
  const Bits work = bits + 16 + static_cast<Bits>(std::log2(std::labs(k) + 1.0));
  const Rational y = (reduced - Rational(1)) / (reduced + Rational(1));
  const Rational total = Rational(2) * atanh_sum(y, work) + Rational(2 * k) * atanh_sum(Rational(1, 3), work);
  return Real(total, bits + 8).rounded(bits);
}

}  // namespace oracle

#endif  // BMGAMMA_TESTS_ORACLES_HPP
