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

#ifndef QUOTASCAN_BOOTSTRAP_HPP
#define QUOTASCAN_BOOTSTRAP_HPP

#include <array>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quotascan/stats.hpp"
#include "quotascan/types.hpp"

namespace quotascan {

/// Per-z summary of the bootstrap deviation distribution.
struct BootstrapSummary {
  int z = 0;
  int draws = 0;  // B
  double interval_lo = 0.0;
  double interval_hi = 0.0;
  double empirical_p = 1.0;
  double observed_deviation = 0.0;
  double mean_of_draws = 0.0;
};

struct BootstrapOptions {
  int z_max = 10;
  int draws = 10'000;  // B
  std::uint64_t seed = 0;
  double level = 0.90;
  stats::Sidedness sidedness = stats::Sidedness::two_sided;
  // Total deviation values retained for export across all z. Beyond this the
  // run switches to streaming quantile summaries and exact export is off.
  std::size_t draw_storage_cap = 1'000'000;
  // Replication workers. 0 = hardware concurrency. The output is byte
  // identical for any value: replication b's randomness is addressed by
  // (seed, b, stratum, department) and results are folded in b order.
  unsigned threads = 1;
};

struct BootstrapResult {
  std::vector<BootstrapSummary> summaries;       // z = 0..z_max
  std::vector<std::vector<double>> draws;        // per z, size B; empty if not retained
  bool draws_retained = true;
  std::vector<std::string> warnings;
};

/// Parametric bootstrap under the fitted null: for each replication, redraw
/// every department's count as Binomial(size, stratum share), recount the
/// z-women departments, and record the summed deviation from the analytical
/// expectation. Degenerate strata are excluded, matching the test module.
/// Requires draws >= 100 and at least one non-degenerate stratum.
BootstrapResult run_bootstrap(const Dataset& dataset, const BootstrapOptions& options);

/// Order-statistic percentile interval by the nearest-rank rule: the k-th
/// smallest draw with k = ceil(q * n), at q = (1-level)/2 and 1-(1-level)/2.
std::pair<double, double> empirical_interval(std::span<const double> draws,
                                             double level);

/// Raw draw export (`z,replication,deviation`) for external plotting.
/// Requires the run to have retained its draws.
void write_draws_csv(const BootstrapResult& result, std::ostream& out);

/// P-squared streaming quantile estimator (Jain & Chlamtac, 1985): tracks a
/// single quantile with five markers and O(1) memory. Used when a bootstrap
/// run exceeds the draw storage cap. Estimates are exact until five
/// observations, approximate after.
class StreamingQuantile {
 public:
  explicit StreamingQuantile(double quantile);

  void add(double x);
  double value() const;
  long long count() const { return count_; }

 private:
  double parabolic(int i, double sign) const;
  double linear(int i, double sign) const;

  double q_;
  long long count_ = 0;
  std::array<double, 5> heights_{};
  std::array<double, 5> positions_{};
  std::array<double, 5> desired_{};
  std::array<double, 5> increments_{};
};

}  // namespace quotascan

#endif  // QUOTASCAN_BOOTSTRAP_HPP
