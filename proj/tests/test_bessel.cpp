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

// Convergent I0/S0/K0 series, the divergent product series and the exact
// remainder oracle.

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace bmgamma;

namespace {

const Real& gamma_ref() {
  static const Real g = reference_gamma(2048);
  return g;
}

}  // namespace

TEST(Bessel, FrozenValuesAtTwo) {
  const Bits bits = 160;
  EXPECT_LT(oracle::rel_bits(i0(Rational(2), bits).value, oracle::parse(oracle::kI0At2)), -158);
  EXPECT_LT(oracle::rel_bits(s0(Rational(2), bits).value, oracle::parse(oracle::kS0At2)), -158);
  EXPECT_LT(oracle::rel_bits(k0_from_identity(Rational(2), bits, gamma_ref()), oracle::parse(oracle::kK0At2)), -157);
  EXPECT_LT(oracle::rel_bits(i0k0_oracle(Rational(2), bits, gamma_ref()), oracle::parse(oracle::kI0K0At2)), -157);
}

TEST(Bessel, FrozenValuesLargerArguments) {
  const Bits bits = 160;
  EXPECT_LT(oracle::rel_bits(s0(Rational(6), bits).value, oracle::parse(oracle::kS0At6)), -158);
  EXPECT_LT(oracle::rel_bits(k0_from_identity(Rational(6), bits, gamma_ref()), oracle::parse(oracle::kK0At6)), -157);
  // K0(50) ~ 3e-23 after cancelling two terms of size ~1e20.
  EXPECT_LT(oracle::rel_bits(k0_from_identity(Rational(50), bits, gamma_ref()), oracle::parse(oracle::kK0At50)), -157);
}

TEST(Bessel, ZeroArgument) {
  const BesselPartialSums s = bessel_partial_sums(Rational(0), 64);
  EXPECT_EQ(s.i0, Rational(1));
  EXPECT_TRUE(s.s0.is_zero());
  EXPECT_THROW(bessel_partial_sums(Rational(-1), 64), DomainError);
  EXPECT_THROW(k0_from_identity(Rational(0), 64, gamma_ref()), DomainError);
}

TEST(Bessel, TailBoundsDominateTrueTails) {
  // Sum with far more terms and check the omitted part is within the bound.
  for (long z : {1L, 4L, 20L, 60L}) {
    const Bits bits = 128;
    const BesselPartialSums s = bessel_partial_sums(Rational(z), bits);
    const BesselPartialSums big = bessel_partial_sums(Rational(z), 4 * bits);
    ASSERT_GT(big.terms, s.terms);
    const Rational i_tail = big.i0 - s.i0;
    const Rational s_tail = big.s0 - s.s0;
    EXPECT_GT(i_tail.sign(), 0);
    EXPECT_LE(i_tail, s.i0_tail) << z;
    EXPECT_LE(s_tail, s.s0_tail) << z;
    // And the bounds are not absurdly loose.
    EXPECT_LE(s.i0_tail, Rational(4) * i_tail + pow(Rational(2), -static_cast<long>(4 * bits)));
    // Relative size below the requested precision.
    EXPECT_LT(s.i0_tail / s.i0, pow(Rational(2), -static_cast<long>(bits)));
  }
}

TEST(Bessel, BinarySplittingEqualsRecurrenceExactly) {
  for (long z : {1L, 3L, 17L, 60L, 200L}) {
    const BesselPartialSums a = bessel_partial_sums(Rational(z), 300, SumMethod::kRecurrence);
    const BesselPartialSums b = bessel_partial_sums(Rational(z), 300, SumMethod::kBinarySplitting);
    EXPECT_EQ(a.terms, b.terms);
    EXPECT_EQ(a.i0, b.i0) << z;
    EXPECT_EQ(a.s0, b.s0) << z;
  }
  // Non-integer rational argument.
  const auto a = bessel_partial_sums(Rational(7, 3), 200, SumMethod::kRecurrence);
  const auto b = bessel_partial_sums(Rational(7, 3), 200, SumMethod::kBinarySplitting);
  EXPECT_EQ(a.s0, b.s0);
}

TEST(Bessel, PrecisionDoublingConverges) {
  // Rounding budget: the result at p agrees with the result at 2p to ~p bits.
  for (Bits p : {64, 128, 256, 512}) {
    const Real lo = k0_from_identity(Rational(30), p, gamma_ref());
    const Real hi = k0_from_identity(Rational(30), 2 * p, gamma_ref());
    EXPECT_LT(oracle::rel_bits(lo, hi), -static_cast<double>(p) + 1) << p;
  }
}

TEST(Bessel, ShortGammaIsAPrecisionError) {
  const Real short_gamma = gamma_ref().rounded(64);
  EXPECT_THROW(k0_from_identity(Rational(50), 200, short_gamma), PrecisionError);
}

TEST(Bessel, AsymptoticTermsAndPartialSum) {
  // (1/2x) ((2k)!)^3 / ((k!)^4 (8x)^{2k}), k = 1, x = 3: 8 / (2*3*576).
  EXPECT_EQ(asym_term(3, 0), Rational(1, 6));
  EXPECT_EQ(asym_term(3, 1), Rational(8, 3456));
  Rational direct;
  for (long k = 0; k < 7; ++k) direct += asym_term(5, k);
  EXPECT_EQ(asym_partial_sum_exact(5, 7), direct);
  EXPECT_THROW(asym_partial_sum_exact(0, 3), DomainError);
}

TEST(Bessel, ArgminOfTermsIsNearX) {
  for (long x : {10L, 25L, 50L, 100L}) {
    const long k = term_scan_argmin(x, 4 * x);
    EXPECT_LE(std::labs(k - x), 1) << x;
    EXPECT_EQ(optimal_index(x), x);
  }
}

TEST(Bessel, ExactRemainderSizeAndPolicy) {
  const long x = 30;
  const Bits bits = remainder_precision(x);
  const RemainderRecord r = exact_remainder(x, x, bits, gamma_ref());
  EXPECT_GT(r.remainder.sign(), 0);
  // Leading behaviour (7/12) e^{-2x} / (sqrt(pi) x^{3/2}) within a few percent.
  const double lead = 7.0 / 12.0 * std::exp(-2.0 * x) / (std::sqrt(M_PI) * std::pow(x, 1.5));
  EXPECT_NEAR(r.remainder.to_double() / lead, 1.0, 0.03);
  EXPECT_THROW(exact_remainder(x, x, bits - 1, gamma_ref()), PrecisionError);
}

TEST(Bessel, ExactRemainderStableUnderMorePrecision) {
  const long x = 40;
  const Bits bits = remainder_precision(x);
  const Real a = exact_remainder(x, x, bits, gamma_ref()).remainder;
  const Real b = exact_remainder(x, x, bits + 200, gamma_ref()).remainder;
  EXPECT_LT(oracle::rel_bits(a, b), -100);
}

TEST(Bessel, ProductOracleFromTwoRoutes) {
  // I0 K0 at a moderately large argument: identity route vs. asymptotic series
  // with remainder R_x(x) added back from the remainder expansion.
  const long x = 60;
  const Bits bits = remainder_precision(x);
  const Real product = i0k0_oracle(Rational(x), bits, gamma_ref());
  const Real approx = asym_partial_sum(x, x, bits) + r_expansion_eval(x, 5, bits);
  EXPECT_LT(oracle::rel_bits(product, approx), -150);
}
