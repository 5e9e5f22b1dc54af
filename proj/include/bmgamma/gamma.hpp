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

#ifndef BMGAMMA_GAMMA_HPP
#define BMGAMMA_GAMMA_HPP

// Euler's constant from the Bessel-function formula
//
//   gamma = S0(2x)/I0(2x) - log x - K0(2x)/I0(2x),
//
// with K0(2x)/I0(2x) replaced by the optimally truncated asymptotic sum for
// I0(2x) K0(2x) (k < 2x) divided by I0(2x)^2. The certified error is the sum
// of the rigorous 24 e^{-8x} truncation bound, the convergent-series tail
// bounds and the rounding budget.

#include <chrono>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "bmgamma/bessel.hpp"
#include "bmgamma/error_model.hpp"
#include "bmgamma/errors.hpp"
#include "bmgamma/rational.hpp"
#include "bmgamma/real.hpp"

namespace bmgamma {

enum class EmitFormat { kText, kJson, kCsv };

struct RunConfig {
  Bits guard_bits = 96;
  EmitFormat emit = EmitFormat::kText;
  std::optional<long> override_x;
  bool binary_splitting = false;

  void validate() const {
    if (guard_bits < 32) throw UsageError("guard bits must be at least 32");
    if (override_x && *override_x < 1) throw UsageError("x must be a positive integer");
  }
};

struct Parameters {
  long x;
  Bits precision_bits;
  long term_count;
};

// Slack applied to 24 e^{-8x} when choosing x; the tails and rounding are
// sized to be far below the remaining quarter of the 10^-d budget.
inline constexpr double kTruncationSafety = 2.0;

/// Smallest x with 24 e^{-8x} * safety < 10^-d / 4, and the working precision
/// ceil(d log2 10) + ceil(log2 terms) + guard.
inline Parameters select_parameters(long digits, Bits guard_bits = 96) {
  if (digits < 1) throw UsageError("digits must be at least 1");
  if (guard_bits < 32) throw UsageError("guard bits must be at least 32");
  const long double need = std::log(24.0L * kTruncationSafety * 4.0L) +
                           static_cast<long double>(digits) * std::log(10.0L);
  long x = static_cast<long>(std::floor(need / 8.0L));
  if (x < 1) x = 1;
  while (8.0L * static_cast<long double>(x) <= need) ++x;

  const Bits digit_bits = bits_for_digits(digits);
  const long terms = convergent_term_count(Rational(2 * x), digit_bits + guard_bits) + 2 * x;
  const auto log_terms = static_cast<Bits>(std::ceil(std::log2(static_cast<double>(terms))));
  return Parameters{x, digit_bits + log_terms + guard_bits, terms};
}

/// One unrounded evaluation at fixed x and precision with its error budget.
struct GammaEvaluation {
  long x;
  Bits bits;
  Real value;
  Real truncation_bound;
  Real tail_error;
  Real rounding_error;
  Real certified_abs_error;
  long convergent_terms;
};

inline GammaEvaluation evaluate_gamma(long x, Bits bits, SumMethod method = SumMethod::kRecurrence) {
  if (x < 1) throw UsageError("x must be a positive integer");
  const BesselPartialSums sums = bessel_partial_sums(Rational(2 * x), bits, method);
  const Rational sigma = asym_partial_sum_exact(2 * x, 2 * x);
  const Rational& s = sums.s0;
  const Rational& i = sums.i0;

  // Everything except log x is a single exact rational, rounded once.
  const Rational combined = s / i - sigma / (i * i);
  const Real log_x = ln_rational(Rational(x), bits);
  Real value = Real(combined, bits) - log_x;

  // |d/dS| = 1/I and |d/dI| <= (S + dS)/I^2 + 2 sigma/I^3 on the tail box.
  const Rational tail = sums.s0_tail / i +
                        ((s + sums.s0_tail) / (i * i) + Rational(2) * sigma / (i * i * i)) * sums.i0_tail;
  Real tail_error = upper_bound(tail, 64);

  // One rounding of `combined`, at most one ulp in the log, one in the
  // subtraction: bounded by 2^{3-bits} (|combined| + |log x| + 1).
  Real magnitude = add_up(add_up(abs(Real(combined, 64, MPFR_RNDU)), abs(log_x).rounded(64, MPFR_RNDU)),
                          Real(1, 64));
  Real rounding_error = ldexp(magnitude, 3 - bits);

  Real truncation = bj_bound(x);
  Real total = add_up(add_up(truncation, tail_error), rounding_error);
  return GammaEvaluation{x,
                         bits,
                         std::move(value),
                         std::move(truncation),
                         std::move(tail_error),
                         std::move(rounding_error),
                         std::move(total),
                         sums.terms};
}

/// Decimal string of `value` rounded half-even to `digits` places, or
/// nullopt when [value - err, value + err] straddles a rounding boundary.
inline std::optional<std::string> round_certified(const Real& value, const Real& err, long digits) {
  const Bits bits = value.precision() + bits_for_digits(digits) + 64;
  mpz_class scale_z;
  mpz_ui_pow_ui(scale_z.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const Real scale(scale_z, bits);

  auto rounded_integer = [&](mpfr_rnd_t dir) {
    Real v(bits);
    mpfr_set(v.get(), value.get(), MPFR_RNDN);
    if (dir == MPFR_RNDD) {
      mpfr_sub(v.get(), v.get(), err.get(), MPFR_RNDD);
    } else {
      mpfr_add(v.get(), v.get(), err.get(), MPFR_RNDU);
    }
    mpfr_mul(v.get(), v.get(), scale.get(), dir);
    mpfr_rint(v.get(), v.get(), MPFR_RNDN);
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v.get(), MPFR_RNDN);
    return z;
  };
  const mpz_class lo = rounded_integer(MPFR_RNDD);
  const mpz_class hi = rounded_integer(MPFR_RNDU);
  if (lo != hi) return std::nullopt;

  const bool negative = lo < 0;
  const mpz_class mag = negative ? mpz_class(-lo) : lo;
  const mpz_class whole = mag / scale_z;
  std::string frac = mpz_class(mag % scale_z).get_str();
  frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
  return (negative ? "-" : "") + whole.get_str() + "." + frac;
}

struct GammaResult {
  long digits_requested;
  long x;
  Bits precision_bits;
  std::string value;
  Real certified_abs_error;
  Real truncation_estimate;  // asymptotic size of the truncation error; informational
  std::chrono::duration<double> wall_time;
  bool retried;
};

inline GammaResult compute_gamma(long digits, const RunConfig& cfg = {}) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const Parameters params = select_parameters(digits, cfg.guard_bits);
  long x = cfg.override_x.value_or(params.x);
  Bits bits = params.precision_bits;
  const SumMethod method = cfg.binary_splitting ? SumMethod::kBinarySplitting : SumMethod::kRecurrence;

  mpz_class scale_z;
  mpz_ui_pow_ui(scale_z.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Real tolerance(64);  // 10^-d rounded down
  const Real scale_up(scale_z, 64, MPFR_RNDU);
  mpfr_ui_div(tolerance.get(), 1, scale_up.get(), MPFR_RNDD);

  for (int attempt = 0; attempt < 2; ++attempt) {
    GammaEvaluation ev = evaluate_gamma(x, bits, method);
    if (!(ev.certified_abs_error < tolerance)) {
      throw CertificationError("certified error " + ev.certified_abs_error.to_scientific(4) +
                               " does not beat 1e-" + std::to_string(digits) + " at x = " +
                               std::to_string(x));
    }
    if (auto text = round_certified(ev.value, ev.certified_abs_error, digits)) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      return GammaResult{digits,
                         x,
                         bits,
                         std::move(*text),
                         std::move(ev.certified_abs_error),
                         ratio_error_eval(x, kMaxExpansionOrder, 64),
                         std::chrono::duration<double>(elapsed),
                         attempt > 0};
    }
    // The certified interval straddles a rounding boundary: tighten once.
    x += std::max(2L, x / 4);
    bits += 64;
  }
  throw CertificationError("certified interval still straddles a rounding boundary at " +
                           std::to_string(digits) + " digits");
}

struct BootstrapCheck {
  GammaEvaluation first;
  GammaEvaluation second;
  Real difference;
  bool consistent;
};

/// Evaluates at x and x + offset and checks the two certified intervals overlap.
inline BootstrapCheck bootstrap_check(long digits, long offset = 10, Bits guard_bits = 96) {
  const Parameters p = select_parameters(digits, guard_bits);
  GammaEvaluation a = evaluate_gamma(p.x, p.precision_bits);
  GammaEvaluation b = evaluate_gamma(p.x + offset, p.precision_bits);
  Real diff = abs(a.value - b.value);
  const bool ok = diff <= add_up(a.certified_abs_error, b.certified_abs_error);
  return BootstrapCheck{std::move(a), std::move(b), std::move(diff), ok};
}

}  // namespace bmgamma

#endif  // BMGAMMA_GAMMA_HPP
