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

#ifndef BMGAMMA_ERROR_MODEL_HPP
#define BMGAMMA_ERROR_MODEL_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "bmgamma/bessel.hpp"
#include "bmgamma/coefficients.hpp"
#include "bmgamma/errors.hpp"
#include "bmgamma/rational.hpp"
#include "bmgamma/real.hpp"

namespace bmgamma {

inline constexpr unsigned kMaxExpansionOrder = 5;

namespace detail {

inline void require_order(unsigned M, unsigned cap, const char* what) {
  if (M < 1) throw UsageError(std::string(what) + ": order must be at least 1");
  if (M > cap) {
    throw UnsupportedOrderError(std::string(what) + ": order " + std::to_string(M) +
                                " exceeds the supported maximum " + std::to_string(cap));
  }
}

// sum_{j<M} terms[j] * step^j
inline Real horner(const std::vector<Rational>& terms, unsigned M, const Real& step) {
  const Bits bits = step.precision();
  Real acc(bits);
  for (unsigned j = M; j-- > 0;) acc = acc * step + Real(terms[j], bits);
  return acc;
}

inline Real prefactor_value(Prefactor p, long x, Bits bits) {
  const Real xr(x, bits);
  const Real pi = Real::pi(bits);
  const Real two_pi = Real(2, bits) * pi;
  const Real x32 = xr * sqrt(xr);
  switch (p) {
    case Prefactor::kRemainder: return exp(Real(-2 * x, bits)) / (sqrt(pi) * x32);
    case Prefactor::kRemainderDoubled:
    case Prefactor::kDelta: return exp(Real(-4 * x, bits)) / (sqrt(two_pi) * x32);
    case Prefactor::kRatioError: return sqrt(two_pi) * exp(Real(-8 * x, bits)) / sqrt(xr);
    case Prefactor::kCentralTerm: return exp(Real(-2 * x, bits)) / (sqrt(pi) * x32);
    case Prefactor::kI0Squared: return exp(Real(4 * x, bits)) / (pi * xr);
  }
  return Real(bits);
}

}  // namespace detail

/// scale * prefactor(x) * sum_{j<M} terms[j] x^{-j}.
inline Real eval_expansion(const ExpansionCoeffs& e, long x, unsigned M, Bits bits) {
  if (M > e.terms.size()) throw UsageError("eval_expansion: not enough coefficients");
  const Bits work = bits + 32;
  const Real inv_x = Real(1, work) / Real(x, work);
  const Real bracket = detail::horner(e.terms, M, inv_x);
  return (Real(e.scale, work) * detail::prefactor_value(e.prefactor, x, work) * bracket).rounded(bits);
}

/// R_x(x) ~ e^{-2x} / (4 sqrt(pi) x^{3/2}) sum_{j<M} B_j (2x)^{-j}.
inline Real r_expansion_eval(long x, unsigned M, Bits bits) {
  detail::require_order(M, kMaxExpansionOrder, "r_expansion_eval");
  const Bits work = bits + 32;
  const std::vector<Rational> b = coeff_tables().b;
  const Real xr(x, work);
  const Real step = Real(1, work) / (Real(2, work) * xr);
  const Real pre = exp(Real(-2 * x, work)) / (Real(4, work) * sqrt(Real::pi(work)) * xr * sqrt(xr));
  return (pre * detail::horner(b, M, step)).rounded(bits);
}

/// R_{2x}(2x) expansion.
inline Real r2n_eval(long x, unsigned M, Bits bits) {
  detail::require_order(M, kMaxExpansionOrder, "r2n_eval");
  return eval_expansion(r2n_coeffs(M), x, M, bits);
}

/// Expansion of the error R_{2x}(2x) / I0(2x)^2 made in K0(2x)/I0(2x).
inline Real ratio_error_eval(long x, unsigned M, Bits bits) {
  detail::require_order(M, kMaxExpansionOrder, "ratio_error_eval");
  return eval_expansion(ratio_error_coeffs(M), x, M, bits);
}

inline Real delta_expansion_eval(long x, unsigned M, Bits bits) {
  detail::require_order(M, static_cast<unsigned>(kMaxDeltaTerms), "delta_expansion_eval");
  return eval_expansion(delta_coeffs(M), x, M, bits);
}

/// (1/4x) ((4x)!)^3 / (((2x)!)^4 (16x)^{4x}): the k = 2x term at argument 2x.
inline Rational central_term_exact(long x) { return asym_term(2 * x, 2 * x); }

/// Bits of gamma needed by delta_exact(x, bits).
inline Bits delta_gamma_bits(long x, Bits bits) { return remainder_gamma_bits(2 * x, bits); }

/// Delta(x) = R_{2x}(2x) - central term, i.e. the remainder after k = 2x.
inline Real delta_exact(long x, Bits bits, const Real& gamma_ref) {
  const RemainderRecord r = exact_remainder(2 * x, 2 * x, bits, gamma_ref);
  return r.remainder - Real(central_term_exact(x), bits);
}

struct DeltaBoundCheck {
  long x;
  Real delta;
  Real epsilon;
  Real bound;
  bool within_bound;
};

/// epsilon(x) = -Delta(x) e^{4x} - 5 x^{-3/2} / (24 sqrt(2 pi)), checked
/// against |epsilon(x)| < 0.863 / x^2.
inline DeltaBoundCheck delta_bound_check(long x, Bits bits, const Real& gamma_ref) {
  Real delta = delta_exact(x, bits, gamma_ref);
  const Real xr(x, bits);
  const Real lead = Real(5, bits) / (Real(24, bits) * sqrt(Real(2, bits) * Real::pi(bits)) * xr * sqrt(xr));
  Real eps = -(delta * exp(Real(4 * x, bits))) - lead;
  Real bound = Real(Rational(863, 1000), bits) / (xr * xr);
  const bool ok = abs(eps) < bound;
  return DeltaBoundCheck{x, std::move(delta), std::move(eps), std::move(bound), ok};
}

/// 24 e^{-8x}, rounded upwards.
inline Real bj_bound(long x, Bits bits = 64) {
  Real out(bits);
  const Real arg(-8 * x, bits);
  mpfr_exp(out.get(), arg.get(), MPFR_RNDU);
  mpfr_mul_ui(out.get(), out.get(), 24, MPFR_RNDU);
  return out;
}

/// E1(x) = -gamma - log x - sum_{k>=1} (-x)^k / (k k!), for x > 0.
/// The series cancels from e^{x} down to e^{-x}; `bits` is the absolute
/// working precision and callers budget for the 2 x log2(e) bits lost.
inline Real e1_series(long x, Bits bits, const Real& gamma_ref) {
  if (x < 1) throw DomainError("e1_series needs x >= 1");
  if (gamma_ref.precision() < bits) throw PrecisionError("e1_series: gamma reference too short");
  const double target = static_cast<double>(bits) + 16.0;
  Rational sum;
  Rational term(1);  // (-x)^k / k!
  for (long k = 1;; ++k) {
    term *= Rational(-x, k);
    sum += term / Rational(k);
    const double log2_mag = static_cast<double>(k) * std::log2(static_cast<double>(x)) -
                            std::lgamma(static_cast<double>(k) + 1.0) * kLog2E;
    if (k > 2 * x && log2_mag < -target) break;
  }
  return -gamma_ref.rounded(bits) - ln_rational(Rational(x), bits) - Real(sum, bits);
}

/// Working precision used by terminant_oracle.
inline Bits terminant_working_precision(long nu, long x, Bits bits) {
  return bits + static_cast<Bits>(std::ceil(3.0 * static_cast<double>(x) * kLog2E)) + nu + 64;
}

/// Gamma(a, x) for integer a <= 1: Gamma(1, x) = e^{-x}, Gamma(0, x) = E1(x),
/// and Gamma(-k, x) = (x^{-k} e^{-x} - Gamma(1-k, x)) / k downwards.
inline Real incomplete_gamma_int(long a, long x, Bits work, const Real& gamma_ref) {
  if (a > 1) throw UsageError("incomplete_gamma_int supports a <= 1");
  if (a == 1) return exp(Real(-x, work));
  Real g = e1_series(x, work, gamma_ref);
  Real power = exp(Real(-x, work));  // x^{-k} e^{-x}
  const Real xr(x, work);
  for (long k = 1; k <= -a; ++k) {
    power = power / xr;
    g = (power - g) / Real(k, work);
  }
  return g;
}

/// T_nu(x) = Gamma(nu) Gamma(1 - nu, x) / (2 pi) for integers nu >= 1, x >= 1.
inline Real terminant_oracle(long nu, long x, Bits bits, const Real& gamma_ref) {
  if (nu < 1) throw DomainError("terminant_oracle needs nu >= 1");
  const Bits floor_bits = static_cast<Bits>(std::ceil(1.5 * static_cast<double>(x))) + 64;
  if (bits < floor_bits) {
    throw PrecisionError("terminant_oracle(" + std::to_string(nu) + ", " + std::to_string(x) +
                         ") needs at least " + std::to_string(floor_bits) + " bits");
  }
  const Bits work = terminant_working_precision(nu, x, bits);
  if (gamma_ref.precision() < work) {
    throw PrecisionError("terminant_oracle needs gamma to " + std::to_string(work) + " bits");
  }
  const Real g = incomplete_gamma_int(1 - nu, x, work, gamma_ref);
  const Real gamma_nu(factorial(static_cast<unsigned long>(nu - 1)), work);
  return (gamma_nu * g / (Real(2, work) * Real::pi(work))).rounded(bits);
}

/// T_{mu-j}(x) ~ e^{-2x} / (2 sqrt(2 pi x)) sum_{k<K} A_{k}(gamma_j) x^{-k},
/// gamma_j = mu - x - j.
inline Real terminant_expansion_eval(long mu, unsigned j, long x, unsigned K, Bits bits) {
  detail::require_order(K, kMaxAOrder + 1, "terminant_expansion_eval");
  const Rational g(mu - x - static_cast<long>(j));
  std::vector<Rational> a;
  for (unsigned k = 0; k < K; ++k) a.push_back(a_polynomial(k, g));
  const Bits work = bits + 32;
  const Real xr(x, work);
  const Real pre = exp(Real(-2 * x, work)) /
                   (Real(2, work) * sqrt(Real(2, work) * Real::pi(work) * xr));
  return (pre * detail::horner(a, K, Real(1, work) / xr)).rounded(bits);
}

inline Real relative_error(const Real& estimate, const Real& exact) {
  return abs((estimate - exact) / exact);
}

struct ErrorReport {
  long x;
  unsigned M;
  Real estimate;
  std::optional<Real> rel_error_vs_exact;
  std::vector<std::string> bounds_applied;
};

/// Expansion of R_x(x) at order M against the exact remainder.
inline ErrorReport remainder_report(long x, unsigned M, const Real& gamma_ref) {
  const Bits bits = remainder_precision(x);
  const RemainderRecord exact = exact_remainder(x, optimal_index(x), bits, gamma_ref);
  Real estimate = r_expansion_eval(x, M, bits);
  Real rel = relative_error(estimate, exact.remainder);
  return ErrorReport{x, M, std::move(estimate), std::move(rel), {"exact-remainder"}};
}

/// One row of the relative-error grid: |R_expansion - R_exact| / |R_exact|
/// for M = 1..5 at N = x.
inline std::vector<Real> relative_error_column(long x, const Real& gamma_ref) {
  const Bits bits = remainder_precision(x);
  const RemainderRecord exact = exact_remainder(x, optimal_index(x), bits, gamma_ref);
  std::vector<Real> out;
  for (unsigned M = 1; M <= kMaxExpansionOrder; ++M) {
    out.push_back(relative_error(r_expansion_eval(x, M, bits), exact.remainder));
  }
  return out;
}

}  // namespace bmgamma

#endif  // BMGAMMA_ERROR_MODEL_HPP
