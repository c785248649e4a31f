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

#include "quotascan/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace quotascan::stats {

namespace {

// Cody's coefficients (netlib specfun CALERF), double-precision constants.
constexpr double kErfA[5] = {3.1611237438705656, 113.864154151050156,
                             377.485237685302021, 3209.37758913846947,
                             0.185777706184603153};
constexpr double kErfB[4] = {23.6012909523441209, 244.024637934444173,
                             1282.61652607737228, 2844.23683343917062};
constexpr double kErfC[9] = {0.564188496988670089, 8.88314979438837594,
                             66.1191906371416295,  298.635138197400131,
                             881.95222124176909,   1712.04761263407058,
                             2051.07837782607147,  1230.33935479799725,
                             2.15311535474403846e-8};
constexpr double kErfD[8] = {15.7449261107098347, 117.693950891312499,
                             537.181101862009858, 1621.38957456669019,
                             3290.79923573345963, 4362.61909014324716,
                             3439.36767414372164, 1230.33935480374942};
constexpr double kErfP[6] = {0.305326634961232344, 0.360344899949804439,
                             0.125781726111229246, 0.0160837851487422766,
                             6.58749161529837803e-4, 0.0163153871373020978};
constexpr double kErfQ[5] = {2.56852019228982242, 1.87295284992346047,
                             0.527905102951428412, 0.0605183413124413191,
                             0.00233520497626869185};
constexpr double kInvSqrtPi = 0.56418958354775628695;

// erf on |x| <= 0.46875.
double erf_small(double x) noexcept {
  const double y = std::fabs(x);
  const double ysq = y > 1.11e-16 ? y * y : 0.0;
  double xnum = kErfA[4] * ysq;
  double xden = ysq;
  for (int i = 0; i < 3; ++i) {
    xnum = (xnum + kErfA[i]) * ysq;
    xden = (xden + kErfB[i]) * ysq;
  }
  return x * (xnum + kErfA[3]) / (xden + kErfB[3]);
}

// exp(-y^2) evaluated as exp(-ysq^2) * exp(-del) with ysq = trunc(16y)/16,
// which keeps the argument reduction exact (Cody's trick).
double exp_msq(double y) noexcept {
  const double ysq = std::trunc(y * 16.0) / 16.0;
  const double del = (y - ysq) * (y + ysq);
  return std::exp(-ysq * ysq) * std::exp(-del);
}

// erfc on 0.46875 <= y <= 4.
double erfc_mid(double y) noexcept {
  double xnum = kErfC[8] * y;
  double xden = y;
  for (int i = 0; i < 7; ++i) {
    xnum = (xnum + kErfC[i]) * y;
    xden = (xden + kErfD[i]) * y;
  }
  return exp_msq(y) * (xnum + kErfC[7]) / (xden + kErfD[7]);
}

// erfc on y > 4.
double erfc_large(double y) noexcept {
  if (y >= 26.543) return 0.0;
  const double ysq = 1.0 / (y * y);
  double xnum = kErfP[5] * ysq;
  double xden = ysq;
  for (int i = 0; i < 4; ++i) {
    xnum = (xnum + kErfP[i]) * ysq;
    xden = (xden + kErfQ[i]) * ysq;
  }
  double r = ysq * (xnum + kErfP[4]) / (xden + kErfQ[4]);
  r = (kInvSqrtPi - r) / y;
  return exp_msq(y) * r;
}

}  // namespace

double erf(double x) noexcept {
  const double y = std::fabs(x);
  if (y <= 0.46875) return erf_small(x);
  const double c = y <= 4.0 ? erfc_mid(y) : erfc_large(y);
  const double r = (0.5 - c) + 0.5;
  return x < 0.0 ? -r : r;
}

double erfc(double x) noexcept {
  const double y = std::fabs(x);
  if (y <= 0.46875) {
    const double e = erf_small(y);
    return x < 0.0 ? 1.0 + e : 1.0 - e;
  }
  const double r = y <= 4.0 ? erfc_mid(y) : erfc_large(y);
  return x < 0.0 ? 2.0 - r : r;
}

double normal_cdf(double x) noexcept { return 0.5 * erfc(-x * 0.7071067811865475244); }

Sidedness sidedness_from_string(const std::string& name) {
  if (name == "two-sided" || name == "two_sided" || name == "two")
    return Sidedness::two_sided;
  if (name == "one-sided" || name == "one_sided" || name == "one" ||
      name == "one_sided_directional")
    return Sidedness::one_sided_directional;
  throw std::invalid_argument("unknown sidedness `" + name + "`");
}

std::string to_string(Sidedness s) {
  return s == Sidedness::two_sided ? "two_sided" : "one_sided_directional";
}

double normal_p_value(double statistic, Sidedness sidedness) {
  if (std::isnan(statistic))
    throw std::domain_error("normal_p_value: statistic is NaN");
  if (sidedness == Sidedness::two_sided)
    return 2.0 * normal_cdf(-std::fabs(statistic));
  return normal_cdf(-statistic);
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("regularized_incomplete_beta: a, b must be positive");
  if (!(x >= 0.0 && x <= 1.0))
    throw std::domain_error("regularized_incomplete_beta: x must lie in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  // The continued fraction converges fast for x < (a+1)/(a+b+2); otherwise
  // use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
  if (x >= (a + 1.0) / (a + b + 2.0))
    return 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);

  const double front = std::exp(std::lgamma(a + b) - std::lgamma(a) -
                                std::lgamma(b) + a * std::log(x) +
                                b * std::log1p(-x)) /
                       a;
  // Modified Lentz evaluation of the standard continued fraction.
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  double c = 1.0;
  double d = 1.0 - (a + b) * x / (a + 1.0);
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 300; ++m) {
    const double m2 = 2.0 * m;
    double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
    d = 1.0 + num * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + num / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
    d = 1.0 + num * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + num / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) break;
  }
  return front * h;
}

double students_t_cdf(double t, double df) {
  if (df <= 0.0) throw std::domain_error("students_t_cdf: df must be positive");
  if (t == 0.0) return 0.5;
  const double x = df / (df + t * t);
  const double tail = 0.5 * regularized_incomplete_beta(df / 2.0, 0.5, x);
  return t > 0.0 ? 1.0 - tail : tail;
}

double students_t_p_value(double t, double df) {
  return regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

double kolmogorov_q(double lambda) noexcept {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-18) break;
    sign = -sign;
  }
  const double q = 2.0 * sum;
  return std::clamp(q, 0.0, 1.0);
}

KsResult ks_test_standard_normal(std::vector<double> samples) {
  if (samples.empty()) throw std::invalid_argument("ks test: empty sample");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double cdf = normal_cdf(samples[i]);
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max(d, std::max(cdf - lo, hi - cdf));
  }
  const double sqrt_n = std::sqrt(n);
  KsResult result;
  result.statistic = d;
  result.p_value = kolmogorov_q((sqrt_n + 0.12 + 0.11 / sqrt_n) * d);
  return result;
}

std::optional<PearsonResult> pearson(std::span<const double> x,
                                     std::span<const double> y) {
  if (x.size() != y.size())
    throw std::invalid_argument("pearson: length mismatch");
  const std::size_t n = x.size();
  if (n < 3) return std::nullopt;

  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;

  PearsonResult result;
  result.n = static_cast<int>(n);
  result.rho = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);

  const double df = static_cast<double>(n) - 2.0;
  if (std::fabs(result.rho) >= 1.0) {
    result.p_value = 0.0;
    result.ci_lo = result.ci_hi = result.rho;
    result.ci_degenerate = true;
    return result;
  }
  const double t = result.rho *
                   std::sqrt(df / (1.0 - result.rho * result.rho));
  result.p_value = students_t_p_value(t, df);

  if (n <= 3) {
    result.ci_lo = result.ci_hi = result.rho;
    result.ci_degenerate = true;
  } else {
    constexpr double kZ975 = 1.959963984540054;
    const double z = std::atanh(result.rho);
    const double half = kZ975 / std::sqrt(static_cast<double>(n) - 3.0);
    result.ci_lo = std::tanh(z - half);
    result.ci_hi = std::tanh(z + half);
  }
  return result;
}

double two_proportion_p_value(long long successes1, long long trials1,
                              long long successes2, long long trials2) {
  if (trials1 <= 0 || trials2 <= 0)
    throw std::invalid_argument("two_proportion_p_value: empty trials");
  const double p1 = static_cast<double>(successes1) / static_cast<double>(trials1);
  const double p2 = static_cast<double>(successes2) / static_cast<double>(trials2);
  const double pooled = static_cast<double>(successes1 + successes2) /
                        static_cast<double>(trials1 + trials2);
  const double var = pooled * (1.0 - pooled) *
                     (1.0 / static_cast<double>(trials1) +
                      1.0 / static_cast<double>(trials2));
  if (var <= 0.0) return 1.0;
  const double z = (p1 - p2) / std::sqrt(var);
  return normal_p_value(z, Sidedness::two_sided);
}

}  // namespace quotascan::stats
