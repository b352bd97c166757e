// Copyright 2026 The pairtangle Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pairtangle/common.hpp"
#include "pairtangle/fock.hpp"

namespace pairtangle {

/// Renders a double with 17 significant digits, enough to round-trip the
/// binary value exactly; the same formatter is used for CSV cells and
/// metadata so identical inputs always produce identical bytes.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return std::string(buf);
}

/// A rectangular numeric sweep result: named columns, one row per grid
/// point, plus key/value metadata echoing the parameters that produced it.
/// Metadata never contains volatile values (timestamps, hostnames), so a
/// table serializes to the same bytes on every run.
struct Table {
  std::string name;
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_meta(const std::string& key, const std::string& value) {
    metadata.emplace_back(key, value);
  }
  void add_meta(const std::string& key, double value) {
    metadata.emplace_back(key, format_double(value));
  }
  void add_meta(const std::string& key, int value) {
    metadata.emplace_back(key, std::to_string(value));
  }
};

namespace detail {

inline void validate_table(const Table& t) {
  require_domain(!t.columns.empty(), "table: no columns");
  for (const auto& row : t.rows) {
    require_domain(row.size() == t.columns.size(), "table: row width differs from column count");
  }
}

}  // namespace detail

/// CSV serialization: '#'-prefixed metadata lines, a column-name row, then
/// data rows with 17-significant-digit values.
inline std::string to_csv(const Table& t) {
  detail::validate_table(t);
  std::string out;
  out += "# table: " + t.name + "\n";
  for (const auto& [key, value] : t.metadata) {
    out += "# " + key + ": " + value + "\n";
  }
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c != 0) out += ',';
    out += t.columns[c];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c != 0) out += ',';
      out += format_double(row[c]);
    }
    out += '\n';
  }
  return out;
}

/// JSON serialization carrying the same values as the CSV form: metadata
/// object, column names, and rows as arrays of numbers.
inline nlohmann::json to_json(const Table& t) {
  detail::validate_table(t);
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [key, value] : t.metadata) meta[key] = value;
  return nlohmann::json{{"table", t.name},
                        {"metadata", meta},
                        {"columns", t.columns},
                        {"rows", t.rows}};
}

/// JSON view of a Fock-space state: occupation-number tuples with their real
/// amplitudes, in lexicographic occupation order.
inline nlohmann::json state_to_json(const FockVector& state) {
  nlohmann::json amps = nlohmann::json::array();
  for (const auto& [occ, amp] : state.amplitudes) {
    amps.push_back(nlohmann::json{{"occupations", occ}, {"amplitude", amp}});
  }
  return nlohmann::json{
      {"statistics", state.statistics == Statistics::boson ? "boson" : "fermion"},
      {"dims", state.dims},
      {"norm_squared", state.norm_squared()},
      {"truncation_tail", state.truncation_tail},
      {"amplitudes", amps}};
}

/// Writes text to a file, replacing any existing content; throws on I/O
/// failure so callers never silently lose a table.
inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw numeric_error("write_text_file: cannot open " + path);
  out << content;
  out.flush();
  if (!out) throw numeric_error("write_text_file: write failed for " + path);
}

}  // namespace pairtangle
