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

#ifndef QUOTASCAN_DEVIATION_HPP
#define QUOTASCAN_DEVIATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "quotascan/stats.hpp"
#include "quotascan/types.hpp"

namespace quotascan {

/// One z-row: observed versus expected count of departments with exactly z
/// minority members, the summed variance, and the standardized statistic.
/// `statistic` and `p_value` are empty when the variance is exactly zero
/// (z beyond every support): the deviation is still reported but there is
/// nothing to standardize by.
struct DeviationRow {
  int z = 0;
  long long observed = 0;
  double expected = 0.0;
  double variance = 0.0;
  double deviation = 0.0;  // observed - expected
  std::optional<double> statistic;
  std::optional<double> p_value;
};

struct DeviationTable {
  std::string scope;  // "overall" or the stratum key
  int z_max = 10;
  stats::Sidedness sidedness = stats::Sidedness::two_sided;
  std::vector<DeviationRow> rows;        // z = 0..z_max
  long long residual_count = 0;          // departments with minority > z_max
  long long total_units = 0;             // departments covered by the table
  std::vector<std::string> excluded_degenerate;  // strata left out (overall scope)
  bool degenerate_scope = false;         // per-stratum table of a degenerate stratum
};

/// Number of departments in the stratum with exactly z minority members.
long long observed_count(const Stratum& stratum, int z) noexcept;

/// Overall table: per z, observed and expected counts summed over the
/// non-degenerate strata, the standardized statistic (deviation over the
/// square root of the summed variance), and its normal p-value. Departments
/// with more than z_max minority members land in the residual bucket, so
/// every department is accounted for exactly once. Throws ValidationError
/// when z_max < 0 or every stratum is degenerate.
DeviationTable deviation_table(const Dataset& dataset, int z_max = 10,
                               stats::Sidedness sidedness = stats::Sidedness::two_sided);

/// One table per stratum, in stratum order. Degenerate strata are included
/// with `degenerate_scope` set (their rows are deterministic; no statistic).
std::vector<DeviationTable> per_stratum_tables(
    const Dataset& dataset, int z_max = 10,
    stats::Sidedness sidedness = stats::Sidedness::two_sided);

}  // namespace quotascan

#endif  // QUOTASCAN_DEVIATION_HPP
