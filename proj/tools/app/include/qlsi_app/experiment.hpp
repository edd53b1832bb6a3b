// Copyright 2026 The qlsi Authors
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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace qlsi::app {

inline constexpr const char* kSuites[] = {"norms", "entropy", "semigroup", "lsi-estimate", "lsi-verify",
                                          "sv",    "hc",      "rhc",       "qht",          "cq"};

struct ExperimentConfig {
  std::string suite;
  std::uint64_t seed = 0;
  nlohmann::json generator;  // generator document, null when unused
  nlohmann::json sigma;      // matrix document for norms and entropy when no generator is given
  nlohmann::json instance;   // {"rho": M, "sigma": M} for qht
  std::vector<double> p_grid;
  std::vector<double> q_grid;
  std::vector<double> t_grid;
  std::vector<double> t_factors{1.0};
  std::vector<double> eps_grid;
  std::vector<int> n_grid;
  std::vector<int> message_grid;
  int samples = 1000;
  int starts = 32;
  int codes_per_cell = 20;
  nlohmann::json beta;   // number, "gap-bound" or "closed-form"
  std::optional<double> alpha;
  double tolerance = 0.0;  // resolved to the suite default when not overridden
  std::string output;      // path prefix for .csv, .json and .plot.csv
};

/// Tolerance each suite asserts against unless overridden upward.
double default_tolerance(const std::string& suite);

/// Validates and fills defaults. Throws qlsi::ParseError or qlsi::ParameterError.
ExperimentConfig parse_config(const nlohmann::json& doc);

/// Reads a .json file as JSON and anything else as TOML; a TOML parse failure
/// falls back to JSON.
ExperimentConfig load_config(const std::string& path);

struct ReportRow {
  std::string suite;
  std::string cell;
  std::string tag;
  double value = 0.0;
  double margin = 0.0;
  std::string pass;  // "yes", "no" or "exploratory"
  std::optional<double> value_bits;
};

struct PlotPoint {
  double x = 0.0;
  double y = 0.0;
  std::string series;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  std::vector<ReportRow> rows;
  std::vector<PlotPoint> plot;
  nlohmann::json witnesses = nlohmann::json::array();

  bool pass() const;
  std::size_t failures() const;
};

Report run(const ExperimentConfig& config);

std::string report_csv(const Report& report);
nlohmann::json report_summary(const Report& report);
/// Long-format x,y,series rows. Rows without explicit plot points map to
/// (row index, margin, tag). Throws qlsi::ParameterError on an empty report.
std::string emit_plot_data(const Report& report);

/// Writes <prefix>.csv, <prefix>.json and <prefix>.plot.csv.
void write_report(const Report& report, const std::string& prefix);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

}  // namespace qlsi::app
