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

#ifndef BMGAMMA_BESSEL_HPP
#define BMGAMMA_BESSEL_HPP

// Convergent power series for I0 and S0 (the harmonic-weighted companion of
// I0), K0 through  K0(z) = S0(z) - (gamma + log(z/2)) I0(z),  and the
// truncated asymptotic series of I0(x) K0(x) together with its exact
// remainder.
//
//   I0(z) = sum_n (z/2)^{2n} / (n!)^2
//   S0(z) = sum_n H_n (z/2)^{2n} / (n!)^2,    H_n = 1 + 1/2 + ... + 1/n
//
// Partial sums are formed exactly as rationals and rounded once.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "bmgamma/errors.hpp"
#include "bmgamma/rational.hpp"
#include "bmgamma/real.hpp"

namespace bmgamma {

/// A rounded series value plus a rigorous bound on the neglected tail.
struct SeriesValue {
  Real value;
  Real tail_bound;
  long terms_used;
};

enum class SumMethod { kRecurrence, kBinarySplitting };

/// Exact partial sums of I0(z) and S0(z) over n < terms, with upper bounds
/// on both tails.
struct BesselPartialSums {
  Rational i0;
  Rational s0;
  Rational i0_tail;
  Rational s0_tail;
  long terms;
};

inline constexpr double kLog2E = 1.4426950408889634;

/// Number of terms needed so that the first omitted term of I0(z) is below
/// 2^-(bits+32) of the sum and past the point where term ratios drop under 1/4.
inline long convergent_term_count(const Rational& z, Bits bits) {
  const double zd = z.to_double();
  if (zd <= 0.0) return 1;
  const double log2_half_z = std::log2(zd / 2.0);
  const double target = static_cast<double>(bits) + 32.0 + 8.0;
  double log2_term = 0.0;
  double log2_max = 0.0;
  long n = 0;
  while (true) {
    ++n;
    log2_term += 2.0 * (log2_half_z - std::log2(static_cast<double>(n)));
    log2_max = std::max(log2_max, log2_term);
    if (static_cast<double>(n) > zd && log2_term - log2_max < -target) return n;
  }
}

namespace detail {

struct SplitNode {
  mpz_class p, q, t, c, d, v;
};

// Sums over n in [a, b) of  prod_{i<=n} p/q(i)  and of that product times
// sum_{i<=n} 1/i  (products restarted at a). Leaf n: p = hn, q = hd n^2.
inline SplitNode split_sum(long a, long b, const mpz_class& hn, const mpz_class& hd) {
  if (b - a == 1) {
    SplitNode leaf;
    leaf.p = hn;
    leaf.q = hd * a * a;
    leaf.t = leaf.p;
    leaf.c = 1;
    leaf.d = a;
    leaf.v = leaf.p;
    return leaf;
  }
  const long m = a + (b - a) / 2;
  const SplitNode l = split_sum(a, m, hn, hd);
  const SplitNode r = split_sum(m, b, hn, hd);
  SplitNode out;
  out.p = l.p * r.p;
  out.q = l.q * r.q;
  out.d = l.d * r.d;
  out.c = l.c * r.d + r.c * l.d;
  out.t = l.t * r.q + l.p * r.t;
  out.v = l.v * r.q * r.d + l.p * l.d * r.v + l.p * l.c * r.d * r.t;
  return out;
}

inline void fill_tails(BesselPartialSums& s, const Rational& z, const Rational& next_term,
                       const Rational& next_harmonic) {
  const long n = s.terms;  // index of the first omitted term
  const Rational rho = z * z / Rational(4 * (n + 1) * (n + 1));
  const Rational rho_h = rho * Rational(n + 2, n + 1);
  s.i0_tail = next_term / (Rational(1) - rho);
  s.s0_tail = next_harmonic * next_term / (Rational(1) - rho_h);
}

}  // namespace detail

/// Exact partial sums of I0(z), S0(z) for z >= 0 sized for `bits`.
inline BesselPartialSums bessel_partial_sums(const Rational& z, Bits bits,
                                             SumMethod method = SumMethod::kRecurrence) {
  if (z.sign() < 0) throw DomainError("bessel series need a non-negative argument");
  BesselPartialSums out{Rational(1), Rational(0), Rational(0), Rational(0), 1};
  if (z.is_zero()) return out;
  const long terms = convergent_term_count(z, bits);
  out.terms = terms;
  const Rational ratio = z * z / Rational(4);

  Rational last_term;  // t_{terms-1}
  Rational harmonic;   // H_{terms-1}
  if (method == SumMethod::kRecurrence || terms < 2) {
    // Backward nesting over one shared denominator, a = hn/hd:
    //   V_k = 1 + a/(k+1)^2 V_{k+1}
    //   X_k = a/(k+1)^2 (X_{k+1} + V_{k+1}/(k+1))
    // with V_0 = I0 partial sum and X_0 = S0 partial sum.
    const mpz_class& hn = ratio.num();
    const mpz_class& hd = ratio.den();
    mpz_class v = 1, x = 0, den = 1;
    for (long k = terms - 2; k >= 0; --k) {
      const mpz_class m = k + 1;
      const mpz_class step = hd * m * m * den;
      x = hn * (x * m + v);
      v = (step + hn * v) * m;
      den = step * m;
    }
    out.i0 = Rational(v, den);
    out.s0 = Rational(x, den);
    mpz_class fact = factorial(static_cast<unsigned long>(terms - 1));
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), hn.get_mpz_t(), static_cast<unsigned long>(terms - 1));
    mpz_pow_ui(pd.get_mpz_t(), hd.get_mpz_t(), static_cast<unsigned long>(terms - 1));
    last_term = Rational(pn, mpz_class(pd * fact * fact));
    mpz_class c = 0, d = 1;  // H_k = c / d, unreduced
    for (long k = 1; k < terms; ++k) {
      c = c * k + d;
      d *= k;
    }
    harmonic = Rational(c, d);
  } else {
    const detail::SplitNode all = detail::split_sum(1, terms, ratio.num(), ratio.den());
    out.i0 = Rational(1) + Rational(all.t, all.q);
    out.s0 = Rational(all.v, all.q * all.d);
    last_term = Rational(all.p, all.q);
    harmonic = Rational(all.c, all.d);
  }
  const Rational next_term = last_term * ratio / Rational(terms * terms);
  const Rational next_harmonic = harmonic + Rational(1, terms);
  detail::fill_tails(out, z, next_term, next_harmonic);
  return out;
}

/// I0(z) rounded to `bits`.
inline SeriesValue i0(const Rational& z, Bits bits, SumMethod method = SumMethod::kRecurrence) {
  const BesselPartialSums s = bessel_partial_sums(z, bits, method);
  return SeriesValue{Real(s.i0, bits), upper_bound(s.i0_tail, 64), s.terms};
}

/// S0(z) rounded to `bits`.
inline SeriesValue s0(const Rational& z, Bits bits, SumMethod method = SumMethod::kRecurrence) {
  const BesselPartialSums s = bessel_partial_sums(z, bits, method);
  return SeriesValue{Real(s.s0, bits), upper_bound(s.s0_tail, 64), s.terms};
}

/// Working precision for K0(z) at `bits`: the identity cancels terms of size
/// e^{z} down to a result of size e^{-z}, losing 2 z log2(e) bits.
inline Bits k0_working_precision(const Rational& z, Bits bits) {
  return bits + static_cast<Bits>(std::ceil(2.0 * z.to_double() * kLog2E)) + 64;
}

/// K0(z) = S0(z) - (gamma + log(z/2)) I0(z). `gamma_ref` must carry at least
/// k0_working_precision(z, bits) bits.
inline Real k0_from_identity(const Rational& z, Bits bits, const Real& gamma_ref) {
  if (z.sign() <= 0) throw DomainError("k0_from_identity needs a positive argument");
  const Bits work = k0_working_precision(z, bits);
  if (gamma_ref.precision() < work) {
    throw PrecisionError("k0_from_identity(" + z.str() + ", " + std::to_string(bits) +
                         ") needs gamma to " + std::to_string(work) + " bits, got " +
                         std::to_string(gamma_ref.precision()));
  }
  const BesselPartialSums s = bessel_partial_sums(z, work);
  const Real i = Real(s.i0, work);
  const Real h = Real(s.s0, work);
  const Real g = gamma_ref.rounded(work);
  const Real k = h - (g + ln_rational(z / Rational(2), work)) * i;
  return k.rounded(bits);
}

/// I0(z) K0(z) at `bits`.
inline Real i0k0_oracle(const Rational& z, Bits bits, const Real& gamma_ref) {
  const Bits work = bits + 32;
  const Real k = k0_from_identity(z, work, gamma_ref);
  const Real i = Real(bessel_partial_sums(z, work).i0, work);
  return (i * k).rounded(bits);
}

/// Term k of the truncated asymptotic series at argument x:
/// ((2k)!)^3 / ((k!)^4 (8x)^{2k}) / (2x).
inline Rational asym_term(long x, long k) {
  const mpz_class f2 = factorial(static_cast<unsigned long>(2 * k));
  const mpz_class f1 = factorial(static_cast<unsigned long>(k));
  mpz_class base = 8 * x;
  mpz_class denom;
  mpz_pow_ui(denom.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(2 * k));
  return Rational(mpz_class(f2 * f2 * f2), mpz_class(f1 * f1 * f1 * f1 * denom * 2 * x));
}

/// (1/2x) sum_{k<N} ((2k)!)^3 / ((k!)^4 (8x)^{2k}), exact.
/// Successive terms have ratio (2k+1)^3 / (8 (k+1) x^2).
inline Rational asym_partial_sum_exact(long x, long N) {
  if (x < 1) throw DomainError("asym_partial_sum needs x >= 1");
  if (N < 1) throw UsageError("asym_partial_sum needs N >= 1");
  Rational term(1);
  Rational sum;
  for (long k = 0; k < N; ++k) {
    sum += term;
    term *= Rational((2 * k + 1) * (2 * k + 1) * (2 * k + 1), 8 * (k + 1) * x * x);
  }
  return sum / Rational(2 * x);
}

inline Real asym_partial_sum(long x, long N, Bits bits) {
  return Real(asym_partial_sum_exact(x, N), bits);
}

/// The truncation index that minimizes the remainder: N = x.
inline long optimal_index(long x) {
  if (x < 1) throw DomainError("optimal_index needs x >= 1");
  return x;
}

/// argmin over k in [0, kmax] of the asymptotic-series term magnitude at x.
inline long term_scan_argmin(long x, long kmax) {
  Rational term(1);
  Rational best = term;
  long best_k = 0;
  for (long k = 0; k < kmax; ++k) {
    term *= Rational((2 * k + 1) * (2 * k + 1) * (2 * k + 1), 8 * (k + 1) * x * x);
    if (term < best) {
      best = term;
      best_k = k + 1;
    }
  }
  return best_k;
}

/// Precision that keeps a remainder of size e^{-2x} meaningful after the
/// e^{2x}-scale cancellation inside I0 K0: ceil(5.8 x) + 128 bits.
inline Bits remainder_precision(long x) {
  return static_cast<Bits>(std::ceil(5.8 * static_cast<double>(x))) + 128;
}

struct RemainderRecord {
  long x;
  long N;
  Real partial_sum;
  Real product_exact;
  Real remainder;
};

/// R_N(x) = I0(x) K0(x) - (1/2x) sum_{k<N} ... at `bits`.
inline RemainderRecord exact_remainder(long x, long N, Bits bits, const Real& gamma_ref) {
  if (bits < remainder_precision(x)) {
    throw PrecisionError("exact_remainder(" + std::to_string(x) + ") needs at least " +
                         std::to_string(remainder_precision(x)) + " bits, got " +
                         std::to_string(bits));
  }
  Real product = i0k0_oracle(Rational(x), bits, gamma_ref);
  Real partial = asym_partial_sum(x, N, bits);
  Real remainder = product - partial;
  return RemainderRecord{x, N, std::move(partial), std::move(product), std::move(remainder)};
}

/// Bits of gamma needed by exact_remainder(x, ., bits).
inline Bits remainder_gamma_bits(long x, Bits bits) {
  return k0_working_precision(Rational(x), bits + 32);
}

}  // namespace bmgamma

#endif  // BMGAMMA_BESSEL_HPP
