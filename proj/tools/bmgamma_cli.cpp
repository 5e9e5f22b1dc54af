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

// Command-line driver: Euler's constant to d digits with a certified error
// bound, and regeneration of the error-expansion tables.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "bmgamma/cli/commands.hpp"

namespace {

bmgamma::EmitFormat pick_format(bool json, bool csv) {
  if (json) return bmgamma::EmitFormat::kJson;
  if (csv) return bmgamma::EmitFormat::kCsv;
  return bmgamma::EmitFormat::kText;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler's constant from Bessel-function series, with the optimal-truncation error expansion"};
  app.require_subcommand(1);

  long digits = 0;
  long x_override = 0;
  long guard = 96;
  bool json = false;
  bool csv = false;
  bool split = false;
  auto* gamma = app.add_subcommand("gamma", "compute Euler's constant with a certified error bound");
  gamma->add_option("-d,--digits", digits, "decimal digits after the point")->required()->check(CLI::PositiveNumber);
  gamma->add_option("--x", x_override, "override the Bessel argument parameter x")->check(CLI::PositiveNumber);
  gamma->add_option("--guard", guard, "guard bits (>= 32)")->check(CLI::Range(32L, 1L << 20));
  gamma->add_flag("--json", json, "emit JSON");
  gamma->add_flag("--binary-splitting", split, "sum the convergent series by binary splitting");

  auto* table1 = app.add_subcommand("table1", "relative error of the remainder expansion, M = 1..5, x = 50, 100, 150");
  auto* t1_json = table1->add_flag("--json", json, "emit JSON");
  table1->add_flag("--csv", csv, "emit CSV")->excludes(t1_json);

  std::string which;
  long max_order = 0;
  auto* coeffs = app.add_subcommand("coeffs", "exact coefficient tables");
  coeffs->add_option("--which", which, "coefficient family")
      ->required()
      ->check(CLI::IsMember(bmgamma::cli::coeff_families()));
  coeffs->add_option("--max", max_order, "number of terms / orders")->required()->check(CLI::PositiveNumber);
  auto* c_json = coeffs->add_flag("--json", json, "emit JSON");
  coeffs->add_flag("--csv", csv, "emit CSV")->excludes(c_json);

  long from = 0;
  long to = 0;
  auto* bound = app.add_subcommand("bound-check", "Delta(x) and epsilon(x) against 0.863/x^2");
  bound->add_option("--from", from, "first x")->required();
  bound->add_option("--to", to, "last x")->required();
  auto* b_json = bound->add_flag("--json", json, "emit JSON");
  bound->add_flag("--csv", csv, "emit CSV")->excludes(b_json);

  long rx = 0;
  unsigned rm = 1;
  auto* remainder = app.add_subcommand("remainder", "exact R_x(x) against its order-M expansion");
  remainder->add_option("--x", rx, "argument x (N = x)")->required()->check(CLI::PositiveNumber);
  remainder->add_option("--M", rm, "expansion order")->required();
  auto* r_json = remainder->add_flag("--json", json, "emit JSON");
  remainder->add_flag("--csv", csv, "emit CSV")->excludes(r_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(bmgamma::ErrorCode::kUsage);
  }

  try {
    bmgamma::cli::Table table;
    if (gamma->parsed()) {
      bmgamma::RunConfig cfg;
      cfg.guard_bits = guard;
      cfg.emit = pick_format(json, false);
      cfg.binary_splitting = split;
      if (x_override > 0) cfg.override_x = x_override;
      table = bmgamma::cli::cmd_gamma(digits, cfg);
    } else if (table1->parsed()) {
      table = bmgamma::cli::cmd_table1();
    } else if (coeffs->parsed()) {
      table = bmgamma::cli::cmd_coeffs(which, max_order);
    } else if (bound->parsed()) {
      table = bmgamma::cli::cmd_bound_check(from, to);
    } else if (remainder->parsed()) {
      table = bmgamma::cli::cmd_remainder(rx, rm);
    }
    std::cout << bmgamma::cli::emit(table, pick_format(json, csv));
    return 0;
  } catch (const bmgamma::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(bmgamma::ErrorCode::kUsage);
  }
}
