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

#ifndef BMGAMMA_CLI_TABLE_HPP
#define BMGAMMA_CLI_TABLE_HPP

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bmgamma/gamma.hpp"

namespace bmgamma::cli {

/// Tabular command output. Cells are strings: exact rationals as "n/d",
/// reals as decimal or scientific text.
struct Table {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

inline nlohmann::ordered_json to_json(const Table& t) {
  nlohmann::ordered_json out;
  out["command"] = t.command;
  out["params"] = t.params;
  out["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = row[i];
    out["rows"].push_back(std::move(obj));
  }
  return out;
}

namespace detail {

inline std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string param_text(const nlohmann::ordered_json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

}  // namespace detail

inline std::string to_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << detail::csv_cell(t.columns[i]);
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << detail::csv_cell(row[i]);
    os << '\n';
  }
  return os.str();
}

inline std::string to_text(const Table& t) {
  std::ostringstream os;
  os << "# " << t.command;
  for (const auto& [key, value] : t.params.items()) os << ' ' << key << '=' << detail::param_text(value);
  os << '\n';
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    width[i] = t.columns[i].size();
    for (const auto& row : t.rows) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << '\n';
  };
  line(t.columns);
  for (const auto& row : t.rows) line(row);
  return os.str();
}

inline std::string emit(const Table& t, EmitFormat format) {
  switch (format) {
    case EmitFormat::kJson: return to_json(t).dump(2) + "\n";
    case EmitFormat::kCsv: return to_csv(t);
    case EmitFormat::kText: return to_text(t);
  }
  return {};
}

}  // namespace bmgamma::cli

#endif  // BMGAMMA_CLI_TABLE_HPP
