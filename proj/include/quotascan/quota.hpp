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

#ifndef QUOTASCAN_QUOTA_HPP
#define QUOTASCAN_QUOTA_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "quotascan/types.hpp"

namespace quotascan {

/// A counterfactual world in which every department holds exactly
/// min(quota, size) minority members. Means across strata are unweighted;
/// size-weighted variants are carried alongside for the weighted-means flag.
struct QuotaScenario {
  int quota = 0;
  std::vector<std::string> stratum_keys;            // dataset stratum order
  std::vector<double> actual_shares;                // per stratum
  std::vector<double> simulated_shares;             // per stratum
  std::vector<std::vector<int>> department_counts;  // replaced counts, per stratum
  double mean_share_actual = 0.0;                   // unweighted across strata
  double mean_share_sim = 0.0;
  double weighted_mean_share_actual = 0.0;          // weighted by stratum size
  double weighted_mean_share_sim = 0.0;
};

/// Replaces every department's minority count by min(quota, size) and
/// recomputes the per-stratum shares and their across-strata means.
QuotaScenario apply_quota(const Dataset& dataset, int quota);

/// Aligned (actual, simulated) per-stratum share vectors, in stratum order,
/// for external density plotting. Throws ValidationError when the scenario
/// was built from a different dataset.
std::pair<std::vector<double>, std::vector<double>> share_vectors(
    const Dataset& dataset, const QuotaScenario& scenario);

/// CSV export: `discipline,actual_share,simulated_share`.
void write_share_csv(const QuotaScenario& scenario, std::ostream& out);

}  // namespace quotascan

#endif  // QUOTASCAN_QUOTA_HPP
