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

#include "quotascan/quota.hpp"

#include <algorithm>
#include <cstdio>

#include "quotascan/errors.hpp"

namespace quotascan {

QuotaScenario apply_quota(const Dataset& dataset, int quota) {
  if (quota < 0) throw ValidationError("quota must be non-negative");

  QuotaScenario scenario;
  scenario.quota = quota;
  long long all_size = 0, all_minority = 0, all_sim = 0;
  for (const auto& stratum : dataset.strata) {
    long long sim_minority = 0;
    std::vector<int> counts;
    counts.reserve(stratum.departments.size());
    for (const auto& dept : stratum.departments) {
      const int replaced = std::min(quota, dept.size);
      counts.push_back(replaced);
      sim_minority += replaced;
    }
    scenario.stratum_keys.push_back(stratum.key);
    scenario.actual_shares.push_back(stratum.share());
    scenario.simulated_shares.push_back(
        stratum.total_size == 0 ? 0.0
                                : static_cast<double>(sim_minority) /
                                      static_cast<double>(stratum.total_size));
    scenario.department_counts.push_back(std::move(counts));
    all_size += stratum.total_size;
    all_minority += stratum.total_minority;
    all_sim += sim_minority;
  }

  const double S = static_cast<double>(dataset.strata.size());
  for (std::size_t i = 0; i < scenario.actual_shares.size(); ++i) {
    scenario.mean_share_actual += scenario.actual_shares[i] / S;
    scenario.mean_share_sim += scenario.simulated_shares[i] / S;
  }
  if (all_size > 0) {
    scenario.weighted_mean_share_actual =
        static_cast<double>(all_minority) / static_cast<double>(all_size);
    scenario.weighted_mean_share_sim =
        static_cast<double>(all_sim) / static_cast<double>(all_size);
  }
  return scenario;
}

std::pair<std::vector<double>, std::vector<double>> share_vectors(
    const Dataset& dataset, const QuotaScenario& scenario) {
  if (scenario.stratum_keys.size() != dataset.strata.size())
    throw ValidationError("quota scenario does not match the dataset");
  for (std::size_t i = 0; i < dataset.strata.size(); ++i)
    if (dataset.strata[i].key != scenario.stratum_keys[i])
      throw ValidationError("quota scenario does not match the dataset");
  return {scenario.actual_shares, scenario.simulated_shares};
}

void write_share_csv(const QuotaScenario& scenario, std::ostream& out) {
  out << "discipline,actual_share,simulated_share\n";
  char a[32], s[32];
  for (std::size_t i = 0; i < scenario.stratum_keys.size(); ++i) {
    std::snprintf(a, sizeof a, "%.17g", scenario.actual_shares[i]);
    std::snprintf(s, sizeof s, "%.17g", scenario.simulated_shares[i]);
    out << scenario.stratum_keys[i] << ',' << a << ',' << s << '\n';
  }
}

}  // namespace quotascan
