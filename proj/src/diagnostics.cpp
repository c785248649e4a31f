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

#include "quotascan/diagnostics.hpp"

#include <charconv>
#include <cmath>

#include "quotascan/errors.hpp"

namespace quotascan {

namespace {

CorrelationReport from_pearson(CorrelationKind kind,
                               const std::optional<stats::PearsonResult>& r) {
  CorrelationReport report;
  report.kind = kind;
  if (!r) return report;  // undefined, reported as such rather than as 0
  report.defined = true;
  report.rho = r->rho;
  report.p_value = r->p_value;
  report.ci_lo = r->ci_lo;
  report.ci_hi = r->ci_hi;
  report.ci_degenerate = r->ci_degenerate;
  report.n = r->n;
  return report;
}

// Negative-deviation indicator; strict inequality, exact zero counts as
// non-negative.
double negative_deviation_indicator(const DeviationTable& table, int z) {
  return table.rows.at(static_cast<std::size_t>(z)).deviation < 0.0 ? 1.0 : 0.0;
}

double attribute_as_number(const std::string& value, const std::string& key) {
  if (value == "true") return 1.0;
  if (value == "false") return 0.0;
  double number = 0.0;
  const char* begin = value.data();
  const char* end = begin + value.size();
  auto [ptr, ec] = std::from_chars(begin, end, number);
  if (ec != std::errc() || ptr != end)
    throw ValidationError("attribute `" + key + "`: value `" + value +
                          "` is neither true/false nor numeric");
  return number;
}

}  // namespace

std::string to_string(CorrelationKind kind) {
  switch (kind) {
    case CorrelationKind::deviation_sign_vs_share:
      return "deviation_sign_vs_share";
    case CorrelationKind::size_vs_share:
      return "size_vs_share";
    case CorrelationKind::attribute_vs_deviation:
      return "attribute_vs_deviation";
  }
  return "unknown";
}

LooReport leave_one_out(const Stratum& stratum, double alpha) {
  if (stratum.n_units() < 2)
    throw ValidationError("leave-one-out requires at least two departments in `" +
                          stratum.key + "`");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ValidationError("alpha must lie in (0, 1)");

  LooReport report;
  report.stratum_key = stratum.key;
  report.alpha = alpha;
  report.loo_shares.reserve(stratum.departments.size());

  const long long W = stratum.total_minority;
  const long long N = stratum.total_size;
  long long rejected = 0;
  for (const auto& dept : stratum.departments) {
    const long long rest_minority = W - dept.minority;
    const long long rest_size = N - dept.size;
    if (rest_size <= 0)
      throw ValidationError("department (" + stratum.key + ", " + dept.unit_key +
                            ") equals the whole stratum pool");
    report.loo_shares.push_back(static_cast<double>(rest_minority) /
                                static_cast<double>(rest_size));
    const double p = stats::two_proportion_p_value(rest_minority, rest_size, W, N);
    if (p < alpha) ++rejected;
  }

  double mean = 0.0;
  for (double s : report.loo_shares) mean += s;
  mean /= static_cast<double>(report.loo_shares.size());
  double ss = 0.0;
  for (double s : report.loo_shares) ss += (s - mean) * (s - mean);
  report.std_dev = std::sqrt(ss / static_cast<double>(report.loo_shares.size()));
  report.reject_fraction =
      static_cast<double>(rejected) / static_cast<double>(stratum.n_units());
  return report;
}

CorrelationReport deviation_sign_correlation(const Dataset& dataset,
                                             const std::vector<DeviationTable>& tables,
                                             int z) {
  if (tables.size() != dataset.strata.size())
    throw ValidationError("per-stratum tables do not match the dataset");
  std::vector<double> indicator;
  std::vector<double> shares;
  for (std::size_t i = 0; i < dataset.strata.size(); ++i) {
    if (dataset.strata[i].degenerate) continue;
    if (z < 0 || z > tables[i].z_max)
      throw ValidationError("z outside the per-stratum table range");
    indicator.push_back(negative_deviation_indicator(tables[i], z));
    shares.push_back(dataset.strata[i].share());
  }
  if (indicator.size() < 3)
    throw ValidationError("deviation-sign correlation needs >= 3 usable strata");
  auto report = from_pearson(CorrelationKind::deviation_sign_vs_share,
                             stats::pearson(indicator, shares));
  report.z = z;
  return report;
}

CorrelationReport size_share_correlation(const Dataset& dataset) {
  if (dataset.strata.size() < 3)
    throw ValidationError("size/share correlation needs >= 3 strata");
  std::vector<double> mean_sizes;
  std::vector<double> shares;
  mean_sizes.reserve(dataset.strata.size());
  shares.reserve(dataset.strata.size());
  for (const auto& stratum : dataset.strata) {
    mean_sizes.push_back(stratum.mean_size());
    shares.push_back(stratum.share());
  }
  return from_pearson(CorrelationKind::size_vs_share,
                      stats::pearson(mean_sizes, shares));
}

CorrelationReport attribute_deviation_correlation(
    const Dataset& dataset, const std::vector<DeviationTable>& tables, int z,
    const std::string& attribute_key) {
  if (tables.size() != dataset.strata.size())
    throw ValidationError("per-stratum tables do not match the dataset");
  std::vector<double> attribute;
  std::vector<double> indicator;
  for (std::size_t i = 0; i < dataset.strata.size(); ++i) {
    const auto& stratum = dataset.strata[i];
    if (stratum.degenerate) continue;
    auto it = stratum.attributes.find(attribute_key);
    if (it == stratum.attributes.end()) continue;
    if (z < 0 || z > tables[i].z_max)
      throw ValidationError("z outside the per-stratum table range");
    attribute.push_back(attribute_as_number(it->second, attribute_key));
    indicator.push_back(negative_deviation_indicator(tables[i], z));
  }
  if (attribute.size() < 3)
    throw ValidationError("attribute correlation needs >= 3 strata carrying `" +
                          attribute_key + "`");
  auto report = from_pearson(CorrelationKind::attribute_vs_deviation,
                             stats::pearson(attribute, indicator));
  report.z = z;
  report.attribute = attribute_key;
  return report;
}

}  // namespace quotascan
