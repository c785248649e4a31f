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

#ifndef QUOTASCAN_PBD_HPP
#define QUOTASCAN_PBD_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "quotascan/rng.hpp"
#include "quotascan/types.hpp"

namespace quotascan::pbd {

/// log P(Binomial(n, p) = z); -inf outside the support.
double log_binomial_pmf(int n, int z, double p);

/// P(Binomial(n, p) = z) = C(n,z) p^z (1-p)^(n-z). Evaluated in log space
/// (log-gamma for the coefficient) with exact handling of p in {0, 1};
/// exactly 0 for z outside [0, n] or when the log mass underflows
/// (below about exp(-745)). Throws std::domain_error for p outside [0, 1]
/// or negative n.
double binomial_pmf(int n, int z, double p);

/// Mean and variance of the number of units in a stratum showing exactly
/// z minority members, under unit-level binomial draws at the stratum share.
struct ZMoment {
  int z = 0;
  double mean = 0.0;      // sum over units of pmf(size, z, share)
  double variance = 0.0;  // sum over units of pmf * (1 - pmf)
};

ZMoment z_moment(const Stratum& stratum, int z);

/// Exact distribution of a sum of independent Bernoulli variables with
/// heterogeneous success probabilities (the count of z-women departments is
/// one such sum). probs[z] = P(sum = z) for z = 0..n.
struct CountDistribution {
  std::vector<double> probs;

  int support_max() const { return static_cast<int>(probs.size()) - 1; }
  double mean() const;
  double variance() const;
};

inline constexpr std::size_t kDefaultConvolutionCap = 10'000;

/// Exact pmf by iterative convolution: the state is the pmf of the partial
/// sum, extended one Bernoulli at a time (O(n^2), exact to rounding).
/// Throws std::domain_error if any probability is outside [0, 1] and
/// ValidationError if the list exceeds `cap`.
CountDistribution poisson_binomial_exact(std::span<const double> probs,
                                         std::size_t cap = kDefaultConvolutionCap);

/// Inverse-CDF binomial sampler. Consumes exactly one uniform per draw, so a
/// draw's value depends only on the stream address and the draw index. The
/// z=0 mass is precomputed; construct once per department when drawing
/// repeatedly.
class BinomialSampler {
 public:
  BinomialSampler(int size, double p);

  int operator()(rng::Stream& stream) const { return quantile(stream.next_uniform()); }

  /// Smallest k with CDF(k) >= u.
  int quantile(double u) const;

  int size() const { return size_; }

 private:
  int size_;
  double p_;
  double pmf0_;  // (1-p)^size; 0 signals the log-space fallback path
  double odds_;  // p / (1-p)
};

/// One Binomial(size, p) draw from the given stream.
inline int sample_department(int size, double p, rng::Stream& stream) {
  return BinomialSampler(size, p)(stream);
}

}  // namespace quotascan::pbd

#endif  // QUOTASCAN_PBD_HPP
