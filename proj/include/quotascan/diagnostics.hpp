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

#ifndef QUOTASCAN_DIAGNOSTICS_HPP
#define QUOTASCAN_DIAGNOSTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "quotascan/deviation.hpp"
#include "quotascan/types.hpp"

namespace quotascan {

/// Leave-one-out dispersion for one stratum: the stratum share recomputed
/// with each department's members removed from the pool. Small dispersion
/// supports the constant-hiring-probability assumption.
struct LooReport {
  std::string stratum_key;
  std::vector<double> loo_shares;  // one per department, department order
  double std_dev = 0.0;            // population standard deviation
  double reject_fraction = 0.0;    // share of departments failing the equality test
  double alpha = 0.05;
};

/// Computes p_loo = (W - y_d) / (N - n_d) per department, its population
/// standard deviation, and the fraction of departments where a pooled
/// two-proportion z-test rejects equality of the leave-one-out share and the
/// full share at `alpha`. (The reference analysis calls this a t-test for
/// equality of means without fixing its form; since the quantities are
/// proportions, the two-proportion form is used and recorded in output
/// metadata.) Requires at least two departments and a nonempty remainder
/// pool for every department.
LooReport leave_one_out(const Stratum& stratum, double alpha = 0.05);

enum class CorrelationKind {
  deviation_sign_vs_share,
  size_vs_share,
  attribute_vs_deviation,
};

std::string to_string(CorrelationKind kind);

struct CorrelationReport {
  CorrelationKind kind = CorrelationKind::size_vs_share;
  std::optional<int> z;
  std::optional<std::string> attribute;
  bool defined = false;  // false: constant input, correlation undefined
  double rho = 0.0;
  double p_value = 1.0;
  double ci_lo = -1.0;
  double ci_hi = 1.0;
  bool ci_degenerate = false;
  int n = 0;  // strata entering the correlation
};

/// Pearson correlation, across strata, between the indicator
/// {deviation at z < 0} and the stratum share. `tables` must be the
/// per-stratum deviation tables for the same dataset (z within range).
/// Degenerate strata are skipped. Requires >= 3 usable strata.
CorrelationReport deviation_sign_correlation(const Dataset& dataset,
                                             const std::vector<DeviationTable>& tables,
                                             int z);

/// Pearson correlation, across strata, between mean department size and the
/// stratum share. Requires >= 3 strata.
CorrelationReport size_share_correlation(const Dataset& dataset);

/// Pearson correlation, across strata, between a stratum attribute and the
/// indicator {deviation at z < 0}. Attribute values `true`/`false` map to
/// 1/0; otherwise the value must parse as a number. Strata missing the
/// attribute are skipped.
CorrelationReport attribute_deviation_correlation(
    const Dataset& dataset, const std::vector<DeviationTable>& tables, int z,
    const std::string& attribute_key);

}  // namespace quotascan

#endif  // QUOTASCAN_DIAGNOSTICS_HPP
