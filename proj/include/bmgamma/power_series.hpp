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

#ifndef BMGAMMA_POWER_SERIES_HPP
#define BMGAMMA_POWER_SERIES_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bmgamma/errors.hpp"
#include "bmgamma/rational.hpp"

namespace bmgamma {

/// Truncated formal power series c[0] + c[1] t + ... + c[n-1] t^(n-1) with
/// exact rational coefficients. `terms()` is the truncation order n: the
/// series carries no information about t^n and beyond, and every binary
/// operation requires both operands to have the same order.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t terms) : c_(terms) {
    if (terms == 0) throw UsageError("power series needs at least one term");
  }
  explicit PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw UsageError("power series needs at least one term");
  }
  PowerSeries(std::initializer_list<Rational> coeffs) : PowerSeries(std::vector<Rational>(coeffs)) {}

  static PowerSeries constant(const Rational& value, std::size_t terms) {
    PowerSeries out(terms);
    out.c_[0] = value;
    return out;
  }

  /// The series "t" (zero if terms == 1).
  static PowerSeries variable(std::size_t terms) {
    PowerSeries out(terms);
    if (terms > 1) out.c_[1] = Rational(1);
    return out;
  }

  std::size_t terms() const { return c_.size(); }

  const Rational& operator[](std::size_t k) const {
    if (k >= c_.size()) {
      throw UsageError("coefficient t^" + std::to_string(k) + " is beyond truncation order " +
                       std::to_string(c_.size()));
    }
    return c_[k];
  }
  Rational& operator[](std::size_t k) {
    if (k >= c_.size()) {
      throw UsageError("coefficient t^" + std::to_string(k) + " is beyond truncation order " +
                       std::to_string(c_.size()));
    }
    return c_[k];
  }

  const std::vector<Rational>& coefficients() const { return c_; }

  /// Explicit order reduction; never extends.
  PowerSeries truncated(std::size_t terms) const {
    if (terms == 0 || terms > c_.size()) {
      throw UsageError("cannot truncate a series of order " + std::to_string(c_.size()) +
                       " to order " + std::to_string(terms));
    }
    return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(terms)));
  }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.c_ == b.c_; }

  friend std::ostream& operator<<(std::ostream& os, const PowerSeries& s) {
    os << '[';
    for (std::size_t k = 0; k < s.c_.size(); ++k) os << (k ? ", " : "") << s.c_[k];
    return os << ']';
  }

 private:
  std::vector<Rational> c_;
};

namespace detail {

inline void require_same_order(const PowerSeries& a, const PowerSeries& b, const char* op) {
  if (a.terms() != b.terms()) {
    throw UsageError(std::string(op) + ": order mismatch (" + std::to_string(a.terms()) + " vs " +
                     std::to_string(b.terms()) + ")");
  }
}

}  // namespace detail

inline PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  detail::require_same_order(a, b, "ps_add");
  PowerSeries out(a.terms());
  for (std::size_t k = 0; k < a.terms(); ++k) out[k] = a[k] + b[k];
  return out;
}

inline PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  detail::require_same_order(a, b, "ps_sub");
  PowerSeries out(a.terms());
  for (std::size_t k = 0; k < a.terms(); ++k) out[k] = a[k] - b[k];
  return out;
}

inline PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  PowerSeries out(a.terms());
  for (std::size_t k = 0; k < a.terms(); ++k) out[k] = s * a[k];
  return out;
}

/// Cauchy product truncated at the common order.
inline PowerSeries ps_mul(const PowerSeries& a, const PowerSeries& b) {
  detail::require_same_order(a, b, "ps_mul");
  const std::size_t n = a.terms();
  PowerSeries out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// Multiplicative inverse; the constant term must be nonzero.
inline PowerSeries ps_inv(const PowerSeries& a) {
  if (a[0].is_zero()) throw SingularError("ps_inv: zero constant term");
  const std::size_t n = a.terms();
  PowerSeries out(n);
  const Rational inv0 = Rational(1) / a[0];
  out[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * out[k - i];
    out[k] = -acc * inv0;
  }
  return out;
}

/// Formal derivative. Differentiation costs one order: the result has
/// terms() - 1 coefficients.
inline PowerSeries ps_derivative(const PowerSeries& a) {
  if (a.terms() < 2) throw UsageError("ps_derivative: need at least two terms");
  PowerSeries out(a.terms() - 1);
  for (std::size_t k = 1; k < a.terms(); ++k) out[k - 1] = Rational(static_cast<long>(k)) * a[k];
  return out;
}

/// a(b(t)); b must have zero constant term.
inline PowerSeries ps_compose(const PowerSeries& a, const PowerSeries& b) {
  detail::require_same_order(a, b, "ps_compose");
  if (!b[0].is_zero()) throw UsageError("ps_compose: inner series has nonzero constant term");
  const std::size_t n = a.terms();
  // Horner: a0 + b (a1 + b (a2 + ...)).
  PowerSeries out = PowerSeries::constant(a[n - 1], n);
  for (std::size_t k = n - 1; k-- > 0;) {
    out = ps_mul(out, b);
    out[0] += a[k];
  }
  return out;
}

/// Compositional inverse: returns r with a(r(t)) = t to the truncation order.
/// Requires a[0] = 0 and a[1] != 0; a non-unit linear coefficient is
/// normalized out and restored.
inline PowerSeries ps_reverse(const PowerSeries& a) {
  if (a.terms() < 2) throw UsageError("ps_reverse: need at least two terms");
  if (!a[0].is_zero()) throw UsageError("ps_reverse: nonzero constant term");
  if (a[1].is_zero()) throw SingularError("ps_reverse: zero linear coefficient, not invertible");
  const std::size_t n = a.terms();
  const Rational lead = a[1];
  const PowerSeries unit = (Rational(1) / lead) * a;

  PowerSeries r = PowerSeries::variable(n);
  for (std::size_t k = 2; k < n; ++k) {
    // The t^k coefficient of unit(r) is r[k] plus terms fixed by r[1..k-1].
    const PowerSeries c = ps_compose(unit, r);
    r[k] -= c[k];
  }
  Rational scale(1);
  for (std::size_t k = 1; k < n; ++k) {
    scale /= lead;
    r[k] *= scale;
  }
  return r;
}

/// exp(a); a must have zero constant term.
inline PowerSeries ps_exp(const PowerSeries& a) {
  if (!a[0].is_zero()) throw UsageError("ps_exp: nonzero constant term");
  const std::size_t n = a.terms();
  PowerSeries out(n);
  out[0] = Rational(1);
  // k b_k = sum_{i=1..k} i a_i b_{k-i}, from b' = a' b.
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc;
    for (std::size_t i = 1; i <= k; ++i) acc += Rational(static_cast<long>(i)) * a[i] * out[k - i];
    out[k] = acc / Rational(static_cast<long>(k));
  }
  return out;
}

/// log(a); a must have constant term 1.
inline PowerSeries ps_log(const PowerSeries& a) {
  if (a[0] != Rational(1)) throw UsageError("ps_log: constant term must be 1");
  const std::size_t n = a.terms();
  PowerSeries out(n);
  // k l_k = k a_k - sum_{i=1..k-1} i l_i a_{k-i}, from a l' = a'.
  for (std::size_t k = 1; k < n; ++k) {
    Rational acc = Rational(static_cast<long>(k)) * a[k];
    for (std::size_t i = 1; i < k; ++i) acc -= Rational(static_cast<long>(i)) * out[i] * a[k - i];
    out[k] = acc / Rational(static_cast<long>(k));
  }
  return out;
}

/// a^alpha for rational alpha; a must have constant term 1.
inline PowerSeries ps_pow(const PowerSeries& a, const Rational& alpha) {
  return ps_exp(alpha * ps_log(a));
}

/// Series with a single w^-1 singular part: principal / w + regular(w).
struct LaurentSeries {
  Rational principal;
  PowerSeries regular;
};

}  // namespace bmgamma

#endif  // BMGAMMA_POWER_SERIES_HPP
