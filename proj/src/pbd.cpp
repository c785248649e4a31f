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

#include "quotascan/pbd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "quotascan/errors.hpp"

namespace quotascan::pbd {

namespace {

// exp(x) underflows to 0 below roughly -745.13; masses that small are
// immaterial to any sum over the support.
constexpr double kLogUnderflow = -745.0;

void check_binomial_args(int n, double p) {
  if (n < 0) throw std::domain_error("binomial_pmf: n must be non-negative");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("binomial_pmf: p must lie in [0, 1], got " +
                            std::to_string(p));
}

}  // namespace

double log_binomial_pmf(int n, int z, double p) {
  check_binomial_args(n, p);
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  if (z < 0 || z > n) return kNegInf;
  if (p == 0.0) return z == 0 ? 0.0 : kNegInf;
  if (p == 1.0) return z == n ? 0.0 : kNegInf;
  if (z == 0) return static_cast<double>(n) * std::log1p(-p);
  if (z == n) return static_cast<double>(n) * std::log(p);
  const double log_coeff = std::lgamma(n + 1.0) - std::lgamma(z + 1.0) -
                           std::lgamma(n - z + 1.0);
  return log_coeff + z * std::log(p) + (n - z) * std::log1p(-p);
}

double binomial_pmf(int n, int z, double p) {
  const double lp = log_binomial_pmf(n, z, p);
  if (lp == 0.0) return 1.0;
  if (lp < kLogUnderflow) return 0.0;
  return std::exp(lp);
}

ZMoment z_moment(const Stratum& stratum, int z) {
  ZMoment m;
  m.z = z;
  const double p = stratum.share();
  for (const auto& dept : stratum.departments) {
    const double q = binomial_pmf(dept.size, z, p);
    m.mean += q;
    m.variance += q * (1.0 - q);
  }
  return m;
}

double CountDistribution::mean() const {
  double m = 0.0;
  for (std::size_t z = 1; z < probs.size(); ++z)
    m += static_cast<double>(z) * probs[z];
  return m;
}

double CountDistribution::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t z = 0; z < probs.size(); ++z) {
    const double d = static_cast<double>(z) - m;
    v += d * d * probs[z];
  }
  return v;
}

CountDistribution poisson_binomial_exact(std::span<const double> probs,
                                         std::size_t cap) {
  if (probs.size() > cap)
    throw ValidationError("poisson_binomial_exact: " + std::to_string(probs.size()) +
                          " probabilities exceed the cap of " + std::to_string(cap));
  for (double p : probs)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::domain_error("poisson_binomial_exact: probability outside [0, 1]");

  CountDistribution dist;
  dist.probs.assign(probs.size() + 1, 0.0);
  dist.probs[0] = 1.0;
  std::size_t extent = 0;  // highest reachable count so far
  for (double p : probs) {
    ++extent;
    const double q = 1.0 - p;
    for (std::size_t z = extent; z > 0; --z)
      dist.probs[z] = dist.probs[z] * q + dist.probs[z - 1] * p;
    dist.probs[0] *= q;
  }
  return dist;
}

BinomialSampler::BinomialSampler(int size, double p) : size_(size), p_(p) {
  check_binomial_args(size, p);
  if (p_ <= 0.0 || p_ >= 1.0) {
    pmf0_ = 1.0;  // degenerate; quantile() short-circuits
    odds_ = 0.0;
    return;
  }
  const double log_pmf0 = static_cast<double>(size_) * std::log1p(-p_);
  pmf0_ = log_pmf0 < kLogUnderflow ? 0.0 : std::exp(log_pmf0);
  odds_ = p_ / (1.0 - p_);
}

int BinomialSampler::quantile(double u) const {
  if (p_ <= 0.0) return 0;
  if (p_ >= 1.0) return size_;
  if (pmf0_ > 0.0) {
    // CDF walk from z = 0 via pmf(z+1) = pmf(z) * odds * (n-z)/(z+1).
    double pmf = pmf0_;
    double cdf = pmf;
    int z = 0;
    while (u > cdf && z < size_) {
      ++z;
      pmf *= odds_ * static_cast<double>(size_ - z + 1) / static_cast<double>(z);
      cdf += pmf;
    }
    return z;
  }
  // The z=0 mass underflowed (very large n); walk the log-space pmf instead.
  double cdf = 0.0;
  for (int z = 0; z <= size_; ++z) {
    cdf += binomial_pmf(size_, z, p_);
    if (cdf >= u) return z;
  }
  return size_;
}

}  // namespace quotascan::pbd
