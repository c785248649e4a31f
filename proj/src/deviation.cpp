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

#include "quotascan/deviation.hpp"

#include <cmath>

#include "quotascan/errors.hpp"
#include "quotascan/pbd.hpp"

namespace quotascan {

namespace {

void finalize_rows(DeviationTable& table) {
  for (auto& row : table.rows) {
    row.deviation = static_cast<double>(row.observed) - row.expected;
    if (row.variance > 0.0) {
      row.statistic = row.deviation / std::sqrt(row.variance);
      row.p_value = stats::normal_p_value(*row.statistic, table.sidedness);
    }
  }
}

DeviationTable stratum_table(const Stratum& stratum, int z_max,
                             stats::Sidedness sidedness) {
  DeviationTable table;
  table.scope = stratum.key;
  table.z_max = z_max;
  table.sidedness = sidedness;
  table.degenerate_scope = stratum.degenerate;
  table.total_units = stratum.n_units();
  table.rows.resize(z_max + 1);
  for (int z = 0; z <= z_max; ++z) {
    const auto moment = pbd::z_moment(stratum, z);
    auto& row = table.rows[z];
    row.z = z;
    row.observed = observed_count(stratum, z);
    row.expected = moment.mean;
    row.variance = moment.variance;
  }
  for (const auto& dept : stratum.departments)
    if (dept.minority > z_max) ++table.residual_count;
  finalize_rows(table);
  return table;
}

}  // namespace

long long observed_count(const Stratum& stratum, int z) noexcept {
  if (z < 0) return 0;
  long long count = 0;
  for (const auto& dept : stratum.departments)
    if (dept.minority == z) ++count;
  return count;
}

DeviationTable deviation_table(const Dataset& dataset, int z_max,
                               stats::Sidedness sidedness) {
  if (z_max < 0) throw ValidationError("z_max must be non-negative");

  DeviationTable table;
  table.scope = "overall";
  table.z_max = z_max;
  table.sidedness = sidedness;
  table.rows.resize(z_max + 1);
  for (int z = 0; z <= z_max; ++z) table.rows[z].z = z;

  bool any_included = false;
  for (const auto& stratum : dataset.strata) {
    if (stratum.degenerate) {
      table.excluded_degenerate.push_back(stratum.key);
      continue;
    }
    any_included = true;
    table.total_units += stratum.n_units();
    for (int z = 0; z <= z_max; ++z) {
      const auto moment = pbd::z_moment(stratum, z);
      auto& row = table.rows[z];
      row.observed += observed_count(stratum, z);
      row.expected += moment.mean;
      row.variance += moment.variance;
    }
    for (const auto& dept : stratum.departments)
      if (dept.minority > z_max) ++table.residual_count;
  }
  if (!any_included)
    throw ValidationError("every stratum is degenerate (share exactly 0 or 1)");

  finalize_rows(table);
  return table;
}

std::vector<DeviationTable> per_stratum_tables(const Dataset& dataset, int z_max,
                                               stats::Sidedness sidedness) {
  if (z_max < 0) throw ValidationError("z_max must be non-negative");
  std::vector<DeviationTable> tables;
  tables.reserve(dataset.strata.size());
  for (const auto& stratum : dataset.strata)
    tables.push_back(stratum_table(stratum, z_max, sidedness));
  return tables;
}

}  // namespace quotascan
