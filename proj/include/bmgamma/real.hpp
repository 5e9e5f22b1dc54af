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

#ifndef BMGAMMA_REAL_HPP
#define BMGAMMA_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "bmgamma/errors.hpp"
#include "bmgamma/rational.hpp"

namespace bmgamma {

using Bits = mpfr_prec_t;

/// Arbitrary-precision binary floating point value. The precision travels
/// with the value; nothing reads MPFR's global default precision.
///
/// Every primitive below is a single correctly rounded MPFR operation, so the
/// relative error of each call is at most half an ulp of its result.
class Real {
 public:
  explicit Real(Bits bits) { mpfr_init2(v_, checked(bits)); mpfr_set_zero(v_, 1); }

  Real(long value, Bits bits) { mpfr_init2(v_, checked(bits)); mpfr_set_si(v_, value, MPFR_RNDN); }

  Real(const Rational& q, Bits bits, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(v_, checked(bits));
    mpfr_set_q(v_, q.raw().get_mpq_t(), rnd);
  }

  Real(const mpz_class& z, Bits bits, mpfr_rnd_t rnd = MPFR_RNDN) {
    mpfr_init2(v_, checked(bits));
    mpfr_set_z(v_, z.get_mpz_t(), rnd);
  }

  /// Decimal literal such as "0.5772156649" or "1.5e-10".
  static Real parse(const std::string& text, Bits bits, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real out(bits);
    if (mpfr_set_str(out.v_, text.c_str(), 10, rnd) != 0) {
      throw UsageError("not a decimal literal: " + text);
    }
    return out;
  }

  static Real pi(Bits bits, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real out(bits);
    mpfr_const_pi(out.v_, rnd);
    return out;
  }

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Real() { mpfr_clear(v_); }

  Bits precision() const { return mpfr_get_prec(v_); }
  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  /// Copy rounded to a new precision.
  Real rounded(Bits bits, mpfr_rnd_t rnd = MPFR_RNDN) const {
    Real out(bits);
    mpfr_set(out.v_, v_, rnd);
    return out;
  }

  int sign() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Binary exponent e with value = m * 2^e, 0.5 <= |m| < 1.
  long exponent() const { return mpfr_get_exp(v_); }

  /// Scientific notation with `digits` significant digits, e.g. "7.100e-03".
  std::string to_scientific(int digits) const {
    if (is_zero()) return "0";
    const int n = mpfr_snprintf(nullptr, 0, "%.*Re", std::max(digits - 1, 0), v_);
    std::string out(static_cast<std::size_t>(n) + 1, '\0');
    mpfr_snprintf(out.data(), out.size(), "%.*Re", std::max(digits - 1, 0), v_);
    out.resize(static_cast<std::size_t>(n));
    return out;
  }

  /// Fixed notation with `decimals` digits after the point.
  std::string to_fixed(int decimals) const {
    const int n = mpfr_snprintf(nullptr, 0, "%.*Rf", decimals, v_);
    std::string out(static_cast<std::size_t>(n) + 1, '\0');
    mpfr_snprintf(out.data(), out.size(), "%.*Rf", decimals, v_);
    out.resize(static_cast<std::size_t>(n));
    return out;
  }

 private:
  static Bits checked(Bits bits) {
    if (bits < MPFR_PREC_MIN || bits > MPFR_PREC_MAX) {
      throw UsageError("precision out of range: " + std::to_string(bits));
    }
    return bits;
  }

  mpfr_t v_;
};

namespace detail {

template <typename Fn>
Real binary_op(const Real& a, const Real& b, Fn fn) {
  Real out(std::max(a.precision(), b.precision()));
  fn(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

template <typename Fn>
Real unary_op(const Real& a, Fn fn, mpfr_rnd_t rnd = MPFR_RNDN) {
  Real out(a.precision());
  fn(out.get(), a.get(), rnd);
  return out;
}

}  // namespace detail

inline Real operator+(const Real& a, const Real& b) { return detail::binary_op(a, b, mpfr_add); }
inline Real operator-(const Real& a, const Real& b) { return detail::binary_op(a, b, mpfr_sub); }
inline Real operator*(const Real& a, const Real& b) { return detail::binary_op(a, b, mpfr_mul); }
inline Real operator/(const Real& a, const Real& b) {
  if (b.is_zero()) throw DomainError("real division by zero");
  return detail::binary_op(a, b, mpfr_div);
}
inline Real operator-(const Real& a) { return detail::unary_op(a, mpfr_neg); }

inline bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.get(), b.get()) != 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.get(), b.get()) != 0; }
inline bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.get(), b.get()) != 0; }
inline bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.get(), b.get()) != 0; }
inline bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.get(), b.get()) != 0; }

inline Real abs(const Real& a) { return detail::unary_op(a, mpfr_abs); }
inline Real sqrt(const Real& a) { return detail::unary_op(a, mpfr_sqrt); }
inline Real exp(const Real& a) { return detail::unary_op(a, mpfr_exp); }
inline Real log(const Real& a) {
  if (a.sign() <= 0) throw DomainError("log of a non-positive real");
  return detail::unary_op(a, mpfr_log);
}

inline Real pow(const Real& a, long e) {
  Real out(a.precision());
  mpfr_pow_si(out.get(), a.get(), e, MPFR_RNDN);
  return out;
}

inline Real pow(const Real& a, const Real& e) { return detail::binary_op(a, e, mpfr_pow); }

/// a * 2^e, exact.
inline Real ldexp(const Real& a, long e) {
  Real out(a.precision());
  mpfr_mul_2si(out.get(), a.get(), e, MPFR_RNDN);
  return out;
}

/// Sum rounded towards +infinity; used when accumulating error bounds.
inline Real add_up(const Real& a, const Real& b) {
  Real out(std::max(a.precision(), b.precision()));
  mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDU);
  return out;
}

/// Upper bound of a non-negative rational as a Real.
inline Real upper_bound(const Rational& q, Bits bits) { return Real(q, bits, MPFR_RNDU); }

/// 2^-bits * |a|: a generous one-ulp scale for error budgets.
inline Real ulp_scale(const Real& a, Bits bits) {
  Real out = abs(a).rounded(64, MPFR_RNDU);
  mpfr_mul_2si(out.get(), out.get(), -bits + 1, MPFR_RNDU);
  return out;
}

/// Natural logarithm of a positive rational at `bits` of precision.
///
/// The input is split into three ranges so that rounding q to binary never
/// dominates the result: q in [1/2, 2] goes through log1p(q - 1) with q - 1
/// formed exactly; q > 2 is rounded and logged directly; q < 1/2 is handled
/// as -log(1/q). Guard bits keep the total error below one ulp.
inline Real ln_rational(const Rational& q, Bits bits) {
  if (q.sign() <= 0) throw DomainError("ln_rational of a non-positive value " + q.str());
  if (q == Rational(1)) return Real(bits);
  const Bits work = bits + 32;
  const Rational half(1, 2);
  Real out(work);
  if (q >= half && q <= Rational(2)) {
    const Real shifted(q - Rational(1), work);
    mpfr_log1p(out.get(), shifted.get(), MPFR_RNDN);
  } else if (q > Rational(2)) {
    const Real value(q, work);
    mpfr_log(out.get(), value.get(), MPFR_RNDN);
  } else {
    const Real value(Rational(1) / q, work);
    mpfr_log(out.get(), value.get(), MPFR_RNDN);
    mpfr_neg(out.get(), out.get(), MPFR_RNDN);
  }
  return out.rounded(bits);
}

inline Bits bits_for_digits(long digits) {
  return static_cast<Bits>(std::ceil(static_cast<double>(digits) * 3.321928094887362));
}

}  // namespace bmgamma

#endif  // BMGAMMA_REAL_HPP
