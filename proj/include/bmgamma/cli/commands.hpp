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

#ifndef BMGAMMA_CLI_COMMANDS_HPP
#define BMGAMMA_CLI_COMMANDS_HPP

#include <array>
#include <future>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "bmgamma/cli/table.hpp"
#include "bmgamma/coefficients.hpp"
#include "bmgamma/error_model.hpp"
#include "bmgamma/gamma.hpp"
#include "bmgamma/reference.hpp"

namespace bmgamma::cli {

inline constexpr std::array<long, 3> kRelErrorColumns{50, 100, 150};
inline constexpr long kBoundCheckMin = 5;
inline constexpr long kBoundCheckMax = 60;

inline std::string format_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(6) << s;
  return os.str();
}

inline Table cmd_gamma(long digits, const RunConfig& cfg) {
  const GammaResult r = compute_gamma(digits, cfg);
  Table t;
  t.command = "gamma";
  t.params["digits"] = digits;
  t.params["guard_bits"] = cfg.guard_bits;
  if (cfg.override_x) t.params["x"] = *cfg.override_x;
  t.params["binary_splitting"] = cfg.binary_splitting;
  t.columns = {"value", "x", "precision_bits", "certified_abs_error", "truncation_estimate",
               "retried", "wall_time_s"};
  t.rows.push_back({r.value, std::to_string(r.x), std::to_string(r.precision_bits),
                    r.certified_abs_error.to_scientific(4), r.truncation_estimate.to_scientific(4),
                    r.retried ? "true" : "false", format_seconds(r.wall_time.count())});
  return t;
}

/// Relative error of the R_x(x) expansion, M = 1..5 by x = 50, 100, 150,
/// to four significant figures. Columns are computed concurrently.
inline Table cmd_table1(const std::string& ref_path = reference_gamma_path()) {
  std::vector<std::future<std::vector<Real>>> jobs;
  for (long x : kRelErrorColumns) {
    const Bits gamma_bits = remainder_gamma_bits(x, remainder_precision(x));
    Real gamma_ref = reference_gamma(gamma_bits, ref_path);
    jobs.push_back(std::async(std::launch::async, [x, g = std::move(gamma_ref)] { return relative_error_column(x, g); }));
  }
  std::vector<std::vector<Real>> cols;
  for (auto& j : jobs) cols.push_back(j.get());

  Table t;
  t.command = "table1";
  t.params["N"] = "x";
  t.columns = {"M"};
  for (long x : kRelErrorColumns) t.columns.push_back("x=" + std::to_string(x));
  for (unsigned M = 1; M <= kMaxExpansionOrder; ++M) {
    std::vector<std::string> row{std::to_string(M)};
    for (const auto& col : cols) row.push_back(col[M - 1].to_scientific(4));
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline std::vector<std::string> coeff_families() {
  return {"c", "a", "g", "d", "b", "ratio", "delta", "central", "remainder", "r2n", "i0sq", "stirling"};
}

namespace detail {

inline Table expansion_table(const std::string& which, const ExpansionCoeffs& e) {
  Table t;
  t.command = "coeffs";
  t.params["which"] = which;
  t.params["max"] = e.terms.size();
  t.params["prefactor"] = std::string(prefactor_name(e.prefactor));
  t.params["scale"] = e.scale.str();
  t.columns = {"j", "value"};
  for (std::size_t j = 0; j < e.terms.size(); ++j) t.rows.push_back({std::to_string(j), e.terms[j].str()});
  return t;
}

inline void require_cap(const std::string& which, long max, long cap) {
  if (max > cap) {
    throw UnsupportedOrderError("coeffs --which " + which + ": --max is capped at " + std::to_string(cap) +
                                " (requested " + std::to_string(max) + ")");
  }
}

}  // namespace detail

/// Exact coefficient listings. For the two-index families (a, g, d) rows run
/// over k < max and j = 0..4.
inline Table cmd_coeffs(const std::string& which, long max) {
  if (max < 1) throw UsageError("--max must be at least 1");
  const auto n = static_cast<std::size_t>(max);
  Table t;
  t.command = "coeffs";
  t.params["which"] = which;
  t.params["max"] = max;

  if (which == "c") {
    t.columns = {"j", "value"};
    const auto c = c_coeffs(n);
    for (std::size_t j = 0; j < n; ++j) t.rows.push_back({std::to_string(j), c[j].str()});
  } else if (which == "b") {
    detail::require_cap(which, max, static_cast<long>(kMaxBTerms));
    t.columns = {"j", "value"};
    const auto b = b_coeffs(n);
    for (std::size_t j = 0; j < n; ++j) t.rows.push_back({std::to_string(j), b[j].str()});
  } else if (which == "a" || which == "d") {
    detail::require_cap(which, max, static_cast<long>(kMaxAOrder) + 1);
    t.columns = {"k", "j", "value"};
    for (unsigned k = 0; k < n; ++k) {
      for (unsigned j = 0; j <= CoeffTables::kMaxJ; ++j) {
        const Rational v = which == "a" ? a_coeff(k, j) : d_coeff(k, j);
        t.rows.push_back({std::to_string(k), std::to_string(j), v.str()});
      }
    }
  } else if (which == "g") {
    t.columns = {"2k", "j", "ghat", "value"};
    for (unsigned j = 0; j <= CoeffTables::kMaxJ; ++j) {
      const auto g = g_coeffs(2 * static_cast<unsigned>(n - 1), j);
      for (unsigned k = 0; k < n; ++k) {
        const Rational ghat = pow(Rational(6), 2 * static_cast<long>(k)) * g[2 * k];
        t.rows.push_back({std::to_string(2 * k), std::to_string(j), ghat.str(), g[2 * k].str()});
      }
    }
  } else if (which == "stirling") {
    t.columns = {"j", "value"};
    const auto s = stirling_series(n);
    for (std::size_t j = 0; j < n; ++j) t.rows.push_back({std::to_string(j), s[j].str()});
  } else if (which == "ratio") {
    detail::require_cap(which, max, static_cast<long>(kMaxBTerms));
    return detail::expansion_table(which, ratio_error_coeffs(n));
  } else if (which == "delta") {
    detail::require_cap(which, max, static_cast<long>(kMaxDeltaTerms));
    return detail::expansion_table(which, delta_coeffs(n));
  } else if (which == "central") {
    detail::require_cap(which, max, static_cast<long>(kMaxCentralTerms));
    return detail::expansion_table(which, central_term_coeffs(n));
  } else if (which == "remainder") {
    detail::require_cap(which, max, static_cast<long>(kMaxBTerms));
    return detail::expansion_table(which, remainder_coeffs(n));
  } else if (which == "r2n") {
    detail::require_cap(which, max, static_cast<long>(kMaxBTerms));
    return detail::expansion_table(which, r2n_coeffs(n));
  } else if (which == "i0sq") {
    detail::require_cap(which, max, static_cast<long>(kMaxBTerms));
    return detail::expansion_table(which, i0sq_coeffs(n));
  } else {
    throw UsageError("unknown coefficient family '" + which + "'");
  }
  return t;
}

/// Delta(x), epsilon(x) and the 0.863/x^2 bound for each x in [from, to].
inline Table cmd_bound_check(long from, long to, const std::string& ref_path = reference_gamma_path()) {
  if (from < kBoundCheckMin || to > kBoundCheckMax || from > to) {
    throw UsageError("bound-check needs " + std::to_string(kBoundCheckMin) + " <= from <= to <= " +
                     std::to_string(kBoundCheckMax));
  }
  const Bits top_bits = remainder_precision(2 * to);
  const Real gamma_ref = reference_gamma(delta_gamma_bits(to, top_bits), ref_path);
  std::vector<std::future<DeltaBoundCheck>> jobs;
  for (long x = from; x <= to; ++x) {
    jobs.push_back(std::async(std::launch::async, [x, &gamma_ref] {
      return delta_bound_check(x, remainder_precision(2 * x), gamma_ref);
    }));
  }
  Table t;
  t.command = "bound-check";
  t.params["from"] = from;
  t.params["to"] = to;
  t.columns = {"x", "delta", "epsilon", "bound", "status"};
  for (auto& job : jobs) {
    const DeltaBoundCheck c = job.get();
    t.rows.push_back({std::to_string(c.x), c.delta.to_scientific(10), c.epsilon.to_scientific(6),
                      c.bound.to_scientific(4), c.within_bound ? "pass" : "fail"});
  }
  return t;
}

/// Exact R_x(x) against its order-M expansion.
inline Table cmd_remainder(long x, unsigned M, const std::string& ref_path = reference_gamma_path()) {
  if (x < 1) throw UsageError("--x must be a positive integer");
  if (M < 1) throw UsageError("--M must be at least 1");
  if (M > kMaxExpansionOrder) {
    throw UnsupportedOrderError("--M is capped at " + std::to_string(kMaxExpansionOrder));
  }
  const Bits bits = remainder_precision(x);
  const Real gamma_ref = reference_gamma(remainder_gamma_bits(x, bits), ref_path);
  const RemainderRecord exact = exact_remainder(x, optimal_index(x), bits, gamma_ref);
  const Real estimate = r_expansion_eval(x, M, bits);
  Table t;
  t.command = "remainder";
  t.params["x"] = x;
  t.params["M"] = M;
  t.params["precision_bits"] = bits;
  t.columns = {"x", "N", "exact", "estimate", "rel_error"};
  t.rows.push_back({std::to_string(x), std::to_string(exact.N), exact.remainder.to_scientific(20),
                    estimate.to_scientific(20), relative_error(estimate, exact.remainder).to_scientific(4)});
  return t;
}

}  // namespace bmgamma::cli

#endif  // BMGAMMA_CLI_COMMANDS_HPP
