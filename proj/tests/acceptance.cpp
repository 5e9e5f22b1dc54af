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

// Acceptance run: one PASS/FAIL line per criterion with its runtime. Exit
// status is non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bmgamma.hpp"
#include "reference_values.hpp"

using namespace bmgamma;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;  // runtime ceiling, seconds
  std::function<void(Outcome&)> body;
};

const Real& gamma_ref() {
  static const Real g = reference_gamma(3400);
  return g;
}

void coefficient_exactness(Outcome& o) {
  o.check(c_coeffs(6) == reference_values::kC, "c_0..c_5");
  const auto b = b_coeffs(5);
  for (unsigned j : {0u, 1u, 3u, 4u}) o.check(b[j] == reference_values::kB[j], "B_" + std::to_string(j));
  // Reference B_2 is 10x the value its own bracket term 55949/282240 requires.
  o.check(b[2] == reference_values::kB2Corrected && reference_values::kB[2] == Rational(10) * b[2], "B_2 erratum");
  for (unsigned j = 0; j <= 4; ++j) {
    const auto g = g_coeffs(8, j);
    for (unsigned k = 0; k <= 4; ++k) {
      o.check(pow(Rational(6), 2 * static_cast<long>(k)) * g[2 * k] ==
                  reference_values::ghat(k, Rational(-static_cast<long>(j))),
              "Ghat_{" + std::to_string(2 * k) + "," + std::to_string(j) + "}");
    }
  }
  const auto rem = remainder_coeffs(5);
  o.check(rem.terms == reference_values::kRemainderBracket && rem.scale == reference_values::kRemainderScale, "remainder bracket");
  const auto ratio = ratio_error_coeffs(5);
  o.check(ratio.terms == reference_values::kRatioBracket && ratio.scale == reference_values::kRatioScale, "ratio bracket");
  const auto delta = delta_coeffs(4);
  o.check(delta.terms == reference_values::kDeltaBracket && delta.scale == reference_values::kDeltaScale, "delta bracket");
  o.check(central_term_coeffs(4).terms == reference_values::kCentralBracket, "central-term bracket");
  o.check(i0sq_coeffs(5).terms == reference_values::kI0SquaredBracket, "I0^2 bracket");
  o.detail << " c, B, 25 Ghat, 4 brackets, I0^2 exact; reference B_2=55949/3024 is a slip for 55949/30240";
}

void relative_error_grid(Outcome& o) {
  std::vector<std::future<std::vector<Real>>> jobs;
  for (long x : reference_values::kRelErrorX) {
    jobs.push_back(std::async(std::launch::async, [x] { return relative_error_column(x, gamma_ref()); }));
  }
  int matched = 0;
  for (std::size_t c = 0; c < jobs.size(); ++c) {
    const auto col = jobs[c].get();
    for (std::size_t m = 0; m < 5; ++m) {
      const std::string got = col[m].to_scientific(4);
      const bool ok = got == reference_values::kRelErrorGrid[m][c];
      matched += ok;
      o.check(ok, "M=" + std::to_string(m + 1) + " x=" + std::to_string(reference_values::kRelErrorX[c]) + " got " + got);
    }
  }
  o.detail << " " << matched << "/15 entries match";
}

void gamma_computation(Outcome& o) {
  const GammaResult r = compute_gamma(100);
  const std::string fixture = load_reference_digits(reference_gamma_path());
  const Real ref = reference_gamma(bits_for_digits(100) + 256);
  const auto rounded = round_certified(ref, Real(Rational(0), 64), 100);
  o.check(rounded.has_value() && r.value == *rounded, "d=100 digits vs fixture");
  o.check(r.value.substr(0, 101) == fixture.substr(0, 101), "leading 99 digits");
  Real scale(64);
  mpfr_ui_pow_ui(scale.get(), 10, 100, MPFR_RNDN);
  o.check(r.certified_abs_error * scale < Real(1, 64), "certified error < 1e-100");
  const BootstrapCheck b = bootstrap_check(100);
  o.check(b.consistent, "bootstrap");
  o.detail << " x=" << r.x << " bits=" << r.precision_bits << " err<=" << r.certified_abs_error.to_scientific(3)
           << "; bootstrap x=" << b.first.x << "," << b.second.x << " |diff|=" << b.difference.to_scientific(3);
}

void delta_bound(Outcome& o) {
  std::vector<std::future<DeltaBoundCheck>> jobs;
  for (long x = 10; x <= 50; ++x) {
    jobs.push_back(std::async(std::launch::async,
                              [x] { return delta_bound_check(x, remainder_precision(2 * x), gamma_ref()); }));
  }
  double worst = 0.0;
  double at50 = 0.0;
  for (auto& j : jobs) {
    const DeltaBoundCheck c = j.get();
    o.check(c.within_bound, "x=" + std::to_string(c.x));
    const double scaled = std::fabs(c.epsilon.to_double()) * static_cast<double>(c.x * c.x);
    worst = std::max(worst, scaled / 0.863);
    if (c.x == 50) at50 = scaled;
  }
  // "Far below": at least two orders of magnitude under 0.863.
  o.check(at50 < 0.863e-2, "|eps x^2| at x=50 far below 0.863");
  o.detail << " 41/41 x in [10,50]; max |eps x^2|/0.863=" << worst << "; |eps(50) 50^2|=" << at50;
}

void terminant_validation(Outcome& o) {
  // Argument X = 2x with mu = X, so gamma_j = -j.
  std::ostringstream worst;
  for (long x : {50L, 100L}) {
    const long X = 2 * x;
    for (unsigned j = 0; j <= 2; ++j) {
      const Real exact = terminant_oracle(X - static_cast<long>(j), X, 400, gamma_ref());
      double prev = INFINITY;
      double last = 0.0;
      for (unsigned K = 1; K <= 4; ++K) {
        const double r = relative_error(terminant_expansion_eval(X, j, X, K, 400), exact).to_double();
        o.check(r < prev, "decrease x=" + std::to_string(x) + " j=" + std::to_string(j) + " K=" + std::to_string(K));
        prev = r;
        last = r;
      }
      const double scale = 10.0 * std::fabs(a_coeff(4, j).to_double()) * std::pow(static_cast<double>(X), -4.0);
      o.check(last < scale, "K=4 scale x=" + std::to_string(x) + " j=" + std::to_string(j));
      worst << " " << x << "/" << j << ":" << std::setprecision(3) << last / scale;
    }
  }
  o.detail << " K=4 residual / (10|A_4|X^-4) by x/j:" << worst.str();
}

void optimal_truncation(Outcome& o) {
  for (long x : {10L, 25L, 50L, 100L}) {
    const long k = term_scan_argmin(x, 4 * x);
    o.check(std::labs(k - x) <= 1, "x=" + std::to_string(x) + " argmin " + std::to_string(k));
    o.detail << " x=" << x << "->" << k;
  }
}

PowerSeries random_series(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 7);
  PowerSeries s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = Rational(num(rng), den(rng));
  return s;
}

void property_suites(Outcome& o) {
  std::mt19937_64 rng(7);
  int round_trips = 0;
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 3 + i % 8;
    PowerSeries a = random_series(rng, n);
    if (a[0].is_zero()) a[0] = Rational(1, 2);
    o.check(ps_mul(a, ps_inv(a)) == PowerSeries::constant(Rational(1), n), "inverse round trip");
    PowerSeries b = random_series(rng, n);
    b[0] = Rational(0);
    if (b[1].is_zero()) b[1] = Rational(3);
    const PowerSeries r = ps_reverse(b);
    o.check(ps_compose(b, r) == PowerSeries::variable(n) && ps_compose(r, b) == PowerSeries::variable(n),
            "reversion round trip");
    round_trips += 2;
  }

  // Rounding budget: doubling precision changes results by no more than the
  // budget claimed at the lower precision.
  int doublings = 0;
  for (Bits p : {128, 256, 512}) {
    const GammaEvaluation lo = evaluate_gamma(30, p);
    const GammaEvaluation hi = evaluate_gamma(30, 2 * p);
    o.check(abs(lo.value - hi.value) <= add_up(lo.rounding_error, add_up(lo.tail_error, hi.tail_error)),
            "gamma doubling at " + std::to_string(p));
    const Real k_lo = k0_from_identity(Rational(40), p, gamma_ref());
    const Real k_hi = k0_from_identity(Rational(40), 2 * p, gamma_ref());
    o.check(abs(k_lo - k_hi) <= ldexp(abs(k_hi), 2 - p), "K0 doubling at " + std::to_string(p));
    const Real l_lo = ln_rational(Rational(123457, 1000), p);
    const Real l_hi = ln_rational(Rational(123457, 1000), 2 * p);
    o.check(abs(l_lo - l_hi) <= ldexp(abs(l_hi), 1 - p), "ln doubling at " + std::to_string(p));
    doublings += 3;
  }

  // Determinism.
  const GammaResult g1 = compute_gamma(200);
  const GammaResult g2 = compute_gamma(200);
  o.check(g1.value == g2.value && g1.certified_abs_error == g2.certified_abs_error, "compute_gamma determinism");
  const auto t1 = relative_error_column(50, gamma_ref());
  const auto t2 = relative_error_column(50, gamma_ref());
  bool same = true;
  for (std::size_t m = 0; m < t1.size(); ++m) same = same && t1[m] == t2[m];
  o.check(same, "table determinism");

  // Order-of-improvement slopes from exact remainders at x = 50 and 150.
  std::ostringstream slopes;
  const Real e50 = exact_remainder(50, 50, remainder_precision(50), gamma_ref()).remainder;
  const Real e150 = exact_remainder(150, 150, remainder_precision(150), gamma_ref()).remainder;
  for (unsigned M = 1; M <= 4; ++M) {
    const double r50 = relative_error(r_expansion_eval(50, M, remainder_precision(50)), e50).to_double();
    const double r150 = relative_error(r_expansion_eval(150, M, remainder_precision(150)), e150).to_double();
    const double slope = std::log(r150 / r50) / std::log(3.0);
    o.check(std::fabs(slope + M) < 0.6, "slope M=" + std::to_string(M));
    slopes << " " << std::setprecision(3) << slope;
  }
  o.detail << " " << round_trips << " round trips, " << doublings << " doubling checks, determinism x2, slopes"
           << slopes.str();
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "coefficient exactness", 10.0, coefficient_exactness},
      {"AC2", "relative-error grid reproduction", 300.0, relative_error_grid},
      {"AC3", "gamma to 100 digits + bootstrap", 30.0, gamma_computation},
      {"AC4", "Delta(x) bound on [10, 50]", 300.0, delta_bound},
      {"AC5", "terminant validation", 300.0, terminant_validation},
      {"AC6", "optimal truncation index", 60.0, optimal_truncation},
      {"AC7", "property suites", 300.0, property_suites},
  };
  gamma_ref();
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) o.check(false, "runtime over " + std::to_string(c.limit_s) + " s");
    failures += o.pass ? 0 : 1;
    std::printf("%s %s: %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
