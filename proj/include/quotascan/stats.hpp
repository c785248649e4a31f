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

#ifndef QUOTASCAN_STATS_HPP
#define QUOTASCAN_STATS_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace quotascan::stats {

// Error function and complement, Cody's rational minimax approximations
// ("Rational Chebyshev approximation for the error function", Math. Comp.
// 23, 1969). Self-contained so results do not depend on the platform libm;
// absolute error is a few ulps, far inside the 1e-12 budget the normal CDF
// is documented to meet.
double erf(double x) noexcept;
double erfc(double x) noexcept;

/// Standard normal CDF, Phi(x) = erfc(-x / sqrt(2)) / 2.
double normal_cdf(double x) noexcept;

enum class Sidedness { two_sided, one_sided_directional };

Sidedness sidedness_from_string(const std::string& name);
std::string to_string(Sidedness s);

/// p-value of a standard-normal test statistic. Two-sided: 2 Phi(-|t|).
/// One-sided (directional, positive deviations): Phi(-t). Throws
/// std::domain_error on NaN.
double normal_p_value(double statistic, Sidedness sidedness);

/// Regularized incomplete beta I_x(a, b) by the continued-fraction expansion
/// (modified Lentz). Accurate to ~1e-14 for moderate a, b.
double regularized_incomplete_beta(double a, double b, double x);

/// CDF of Student's t with `df` degrees of freedom.
double students_t_cdf(double t, double df);

/// Two-sided p-value for a t statistic.
double students_t_p_value(double t, double df);

/// Upper tail Q(lambda) = 2 sum_{j>=1} (-1)^(j-1) exp(-2 j^2 lambda^2) of the
/// asymptotic Kolmogorov distribution.
double kolmogorov_q(double lambda) noexcept;

struct KsResult {
  double statistic = 0.0;  // sup-norm distance D_n
  double p_value = 1.0;    // asymptotic, with the small-sample correction
};

/// One-sample Kolmogorov-Smirnov test of `samples` against the standard
/// normal. Uses the Stephens finite-sample correction
/// (sqrt(n) + 0.12 + 0.11/sqrt(n)) * D.
KsResult ks_test_standard_normal(std::vector<double> samples);

struct PearsonResult {
  double rho = 0.0;
  double p_value = 1.0;      // t-based, two-sided, n-2 df
  double ci_lo = -1.0;       // Fisher-z 95% interval
  double ci_hi = 1.0;
  bool ci_degenerate = false;  // |rho| = 1 or too few points for the interval
  int n = 0;
};

/// Pearson correlation with t-based p-value and Fisher-z CI. Undefined
/// (nullopt) when fewer than 3 points or either variable is constant.
std::optional<PearsonResult> pearson(std::span<const double> x,
                                     std::span<const double> y);

/// z-test for equality of two proportions (pooled variance): successes1 of
/// trials1 versus successes2 of trials2. Returns the two-sided p-value;
/// 1.0 when the pooled proportion is degenerate.
double two_proportion_p_value(long long successes1, long long trials1,
                              long long successes2, long long trials2);

}  // namespace quotascan::stats

#endif  // QUOTASCAN_STATS_HPP
