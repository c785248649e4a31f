// Copyright 2026 The quotascan authors
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

#ifndef QUOTASCAN_REPORT_HPP
#define QUOTASCAN_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "quotascan/bootstrap.hpp"
#include "quotascan/deviation.hpp"
#include "quotascan/diagnostics.hpp"
#include "quotascan/quota.hpp"
#include "quotascan/stats.hpp"
#include "quotascan/types.hpp"

namespace quotascan {

inline constexpr const char* kReportSchemaVersion = "quotascan/1";

/// Fully resolved run configuration; echoed verbatim into every report so a
/// result can always be traced back to its parameters.
struct RunConfig {
  std::string input_path;
  std::string input_format = "departments";  // "roster" | "departments"
  std::string minority_symbol = "F";
  std::string majority_symbol = "M";
  int min_dept_size = 3;
  int z_max = 10;
  stats::Sidedness sidedness = stats::Sidedness::two_sided;
  int bootstrap_draws = 10'000;
  std::uint64_t seed = 0;
  double interval_level = 0.90;
  int quota = 2;
  double alpha = 0.05;                   // leave-one-out equality test level
  std::vector<int> correlation_z = {0, 3};
  bool weighted_means = false;
  std::string output_format = "json";    // "json" | "csv"
  std::string attribute_path;
  std::string out_path;
  std::string export_draws_path;
  unsigned threads = 1;
  std::size_t draw_storage_cap = 1'000'000;
};

struct ReportSections {
  bool test = false;
  bool bootstrap = false;
  bool diagnostics = false;
  bool quota = false;
};

struct AnalysisOutput {
  nlohmann::ordered_json report;
  std::optional<BootstrapResult> bootstrap;  // kept for raw-draw export
  std::optional<QuotaScenario> quota;
};

/// Reads and validates the configured input (and optional attribute file).
/// Throws IoError when a file cannot be opened, ParseError/ValidationError
/// on bad content.
Dataset load_dataset(const RunConfig& config);

/// Runs the requested sections and assembles the canonical JSON report:
/// top-level keys {version, config, dropped_units, degenerate_strata} plus
/// {deviation_table, per_stratum_tables, bootstrap, diagnostics,
/// quota_scenario} for the sections that ran.
AnalysisOutput run_analysis(const Dataset& dataset, const RunConfig& config,
                            const ReportSections& sections);

std::string render_json(const nlohmann::ordered_json& report);

/// Flat CSV projection of the run's primary table: deviation rows for test
/// and report, bootstrap summaries for bootstrap, the leave-one-out table
/// for diagnose, share vectors for simulate-quota.
std::string render_csv(const AnalysisOutput& output, const ReportSections& sections);

}  // namespace quotascan

#endif  // QUOTASCAN_REPORT_HPP
