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

#ifndef QUOTASCAN_FIXTURES_HPP
#define QUOTASCAN_FIXTURES_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "quotascan/ingest.hpp"
#include "quotascan/types.hpp"

namespace quotascan {

/// How synthetic department counts are produced.
///  - null_random: count ~ Binomial(size, stratum share), the no-quota world
///  - hard_quota:  count = min(quota, size) always
///  - soft_quota:  hard quota, except each department independently "leaks"
///    to a binomial draw with probability `leak`
enum class Regime { null_random, hard_quota, soft_quota };

Regime regime_from_string(const std::string& name);
std::string to_string(Regime regime);

/// Recipe for a synthetic corpus. Department counts, sizes and stratum
/// shares are drawn uniformly from the stated ranges; generation is a pure
/// function of (spec, seed). The default share range mirrors the observed
/// span of discipline-level minority shares (0.07-0.49) so calibration runs
/// live in a realistic regime.
struct CorpusSpec {
  int n_strata = 50;
  std::pair<int, int> departments_per_stratum = {30, 30};
  std::pair<int, int> size_range = {5, 40};
  std::pair<double, double> share_range = {0.07, 0.49};
  Regime regime = Regime::null_random;
  int quota = 2;       // hard_quota / soft_quota
  double leak = 0.0;   // soft_quota only
  std::uint64_t seed = 0;
  int min_dept_size = 3;
};

/// Stratum-level draws of a generation run: how many departments and which
/// target share the counts were (or would be) drawn at. The realized share
/// of a generated stratum scatters around the target.
struct StratumPlan {
  std::string key;
  int n_departments = 0;
  double target_share = 0.0;
};

/// Replays only the stratum-level streams of a generation run. generate()
/// follows the same plan, so this recovers the true data-generating shares
/// of a corpus without regenerating it.
std::vector<StratumPlan> generation_plan(const CorpusSpec& spec);

/// Generates a corpus. Deterministic in (spec, seed); every stratum s and
/// department d draws from the stream addressed (seed, 0, s, d), so the
/// result is independent of generation order. Throws ValidationError on an
/// infeasible spec (reversed ranges, shares outside [0,1], sizes below the
/// minimum department size).
Dataset generate(const CorpusSpec& spec);

/// Emits the department-table CSV accepted by parse_departments.
void write_department_csv(const Dataset& dataset, std::ostream& out);

/// Expands the dataset into the roster CSV accepted by parse_roster: one row
/// per member, minority members first within each department.
void write_roster_csv(const Dataset& dataset, std::ostream& out,
                      const RosterFormat& format = {});

}  // namespace quotascan

#endif  // QUOTASCAN_FIXTURES_HPP
