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

#include "quotascan/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "quotascan/deviation.hpp"
#include "quotascan/errors.hpp"
#include "quotascan/pbd.hpp"

namespace quotascan {

namespace {

constexpr int kMinDraws = 100;
constexpr int kChunkReplications = 1024;

struct FlatDepartment {
  std::uint32_t stratum_index;
  std::uint32_t department_index;
  pbd::BinomialSampler sampler;
};

long long nearest_rank(double quantile, std::size_t n) {
  // ceil(q*n) with a small guard so that exact products (0.95 * 100) do not
  // land on the wrong side of an integer after rounding.
  auto rank = static_cast<long long>(std::ceil(quantile * static_cast<double>(n) - 1e-6));
  return std::clamp<long long>(rank, 1, static_cast<long long>(n));
}

}  // namespace

std::pair<double, double> empirical_interval(std::span<const double> draws,
                                             double level) {
  if (draws.empty()) throw ValidationError("empirical_interval: no draws");
  if (!(level > 0.0 && level < 1.0))
    throw ValidationError("empirical_interval: level must lie in (0, 1)");
  std::vector<double> sorted(draws.begin(), draws.end());
  std::sort(sorted.begin(), sorted.end());
  const double alpha = (1.0 - level) / 2.0;
  const auto lo = nearest_rank(alpha, sorted.size());
  const auto hi = nearest_rank(1.0 - alpha, sorted.size());
  return {sorted[lo - 1], sorted[hi - 1]};
}

BootstrapResult run_bootstrap(const Dataset& dataset, const BootstrapOptions& options) {
  if (options.draws < kMinDraws)
    throw ValidationError("bootstrap draws must be at least " +
                          std::to_string(kMinDraws));
  if (!(options.level > 0.0 && options.level < 1.0))
    throw ValidationError("interval level must lie in (0, 1)");
  if (options.z_max < 0) throw ValidationError("z_max must be non-negative");

  const int z_count = options.z_max + 1;
  const int B = options.draws;

  // Observed deviations and analytical expectations come from the same
  // table the test module reports, so the two modules agree to the bit.
  const DeviationTable table = deviation_table(dataset, options.z_max,
                                               options.sidedness);
  std::vector<double> expected(z_count);
  std::vector<double> observed_dev(z_count);
  for (int z = 0; z < z_count; ++z) {
    expected[z] = table.rows[z].expected;
    observed_dev[z] = table.rows[z].deviation;
  }

  // The stratum's position in the dataset is its stream address, so skipping
  // degenerate strata does not shift anyone else's randomness.
  std::vector<FlatDepartment> departments;
  for (std::uint32_t s = 0; s < dataset.strata.size(); ++s) {
    const Stratum& stratum = dataset.strata[s];
    if (stratum.degenerate) continue;
    const double p = stratum.share();
    for (std::uint32_t d = 0; d < stratum.departments.size(); ++d)
      departments.push_back({s, d, pbd::BinomialSampler(stratum.departments[d].size, p)});
  }

  const bool retain =
      static_cast<std::size_t>(z_count) * static_cast<std::size_t>(B) <=
      options.draw_storage_cap;

  BootstrapResult result;
  result.draws_retained = retain;
  if (retain) {
    result.draws.assign(z_count, {});
    for (auto& v : result.draws) v.reserve(B);
  } else {
    result.warnings.push_back(
        "draw storage cap exceeded: intervals use streaming quantile "
        "summaries and exact draw export is disabled");
  }

  const double alpha = (1.0 - options.level) / 2.0;
  std::vector<StreamingQuantile> stream_lo;
  std::vector<StreamingQuantile> stream_hi;
  if (!retain) {
    stream_lo.assign(z_count, StreamingQuantile(alpha));
    stream_hi.assign(z_count, StreamingQuantile(1.0 - alpha));
  }
  std::vector<long long> exceed(z_count, 0);
  std::vector<double> sum(z_count, 0.0);

  unsigned workers = options.threads == 0
                         ? std::max(1u, std::thread::hardware_concurrency())
                         : options.threads;

  std::vector<double> buffer(static_cast<std::size_t>(kChunkReplications) * z_count);
  const bool two_sided = options.sidedness == stats::Sidedness::two_sided;

  auto run_replication = [&](int b, double* dev_out) {
    // One pass over every department; H*_z falls out of the counts.
    for (int z = 0; z < z_count; ++z) dev_out[z] = 0.0;
    for (const auto& dept : departments) {
      rng::Stream stream(options.seed, static_cast<std::uint32_t>(b),
                         dept.stratum_index, dept.department_index);
      const int y = dept.sampler(stream);
      if (y < z_count) dev_out[y] += 1.0;
    }
    for (int z = 0; z < z_count; ++z) dev_out[z] -= expected[z];
  };

  for (int chunk_start = 0; chunk_start < B; chunk_start += kChunkReplications) {
    const int chunk = std::min(kChunkReplications, B - chunk_start);
    const unsigned used = std::min<unsigned>(workers, static_cast<unsigned>(chunk));
    if (used <= 1) {
      for (int r = 0; r < chunk; ++r)
        run_replication(chunk_start + r + 1, &buffer[static_cast<std::size_t>(r) * z_count]);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(used);
      for (unsigned w = 0; w < used; ++w) {
        const int lo = static_cast<int>(static_cast<long long>(chunk) * w / used);
        const int hi = static_cast<int>(static_cast<long long>(chunk) * (w + 1) / used);
        pool.emplace_back([&, lo, hi] {
          for (int r = lo; r < hi; ++r)
            run_replication(chunk_start + r + 1,
                            &buffer[static_cast<std::size_t>(r) * z_count]);
        });
      }
      for (auto& t : pool) t.join();
    }
    // Fold in replication order; this is what makes the output independent
    // of the partitioning above.
    for (int r = 0; r < chunk; ++r) {
      const double* dev = &buffer[static_cast<std::size_t>(r) * z_count];
      for (int z = 0; z < z_count; ++z) {
        const double d = dev[z];
        sum[z] += d;
        const bool hit = two_sided ? std::fabs(d) >= std::fabs(observed_dev[z])
                                   : d >= observed_dev[z];
        if (hit) ++exceed[z];
        if (retain) {
          result.draws[z].push_back(d);
        } else {
          stream_lo[z].add(d);
          stream_hi[z].add(d);
        }
      }
    }
  }

  result.summaries.resize(z_count);
  for (int z = 0; z < z_count; ++z) {
    auto& s = result.summaries[z];
    s.z = z;
    s.draws = B;
    s.observed_deviation = observed_dev[z];
    s.mean_of_draws = sum[z] / static_cast<double>(B);
    s.empirical_p = static_cast<double>(1 + exceed[z]) / static_cast<double>(B + 1);
    if (retain) {
      std::tie(s.interval_lo, s.interval_hi) =
          empirical_interval(result.draws[z], options.level);
    } else {
      s.interval_lo = stream_lo[z].value();
      s.interval_hi = stream_hi[z].value();
    }
  }
  return result;
}

void write_draws_csv(const BootstrapResult& result, std::ostream& out) {
  if (!result.draws_retained)
    throw ValidationError("raw draws were not retained (storage cap exceeded)");
  out << "z,replication,deviation\n";
  char num[32];
  for (std::size_t z = 0; z < result.draws.size(); ++z) {
    for (std::size_t b = 0; b < result.draws[z].size(); ++b) {
      std::snprintf(num, sizeof num, "%.17g", result.draws[z][b]);
      out << z << ',' << (b + 1) << ',' << num << '\n';
    }
  }
}

StreamingQuantile::StreamingQuantile(double quantile) : q_(quantile) {
  desired_ = {1.0, 1.0 + 2.0 * q_, 1.0 + 4.0 * q_, 3.0 + 2.0 * q_, 5.0};
  increments_ = {0.0, q_ / 2.0, q_, (1.0 + q_) / 2.0, 1.0};
  positions_ = {1.0, 2.0, 3.0, 4.0, 5.0};
}

double StreamingQuantile::parabolic(int i, double sign) const {
  const double pi = positions_[i];
  return heights_[i] +
         sign / (positions_[i + 1] - positions_[i - 1]) *
             ((pi - positions_[i - 1] + sign) * (heights_[i + 1] - heights_[i]) /
                  (positions_[i + 1] - pi) +
              (positions_[i + 1] - pi - sign) * (heights_[i] - heights_[i - 1]) /
                  (pi - positions_[i - 1]));
}

double StreamingQuantile::linear(int i, double sign) const {
  const int j = i + static_cast<int>(sign);
  return heights_[i] + sign * (heights_[j] - heights_[i]) /
                           (positions_[j] - positions_[i]);
}

void StreamingQuantile::add(double x) {
  if (count_ < 5) {
    heights_[count_++] = x;
    if (count_ == 5) std::sort(heights_.begin(), heights_.end());
    return;
  }
  ++count_;

  int k;
  if (x < heights_[0]) {
    heights_[0] = x;
    k = 0;
  } else if (x >= heights_[4]) {
    heights_[4] = std::max(heights_[4], x);
    k = 3;
  } else {
    k = 0;
    while (k < 3 && x >= heights_[k + 1]) ++k;
  }
  for (int i = k + 1; i < 5; ++i) positions_[i] += 1.0;
  for (int i = 0; i < 5; ++i) desired_[i] += increments_[i];

  for (int i = 1; i <= 3; ++i) {
    const double gap = desired_[i] - positions_[i];
    if ((gap >= 1.0 && positions_[i + 1] - positions_[i] > 1.0) ||
        (gap <= -1.0 && positions_[i - 1] - positions_[i] < -1.0)) {
      const double sign = gap >= 1.0 ? 1.0 : -1.0;
      const double candidate = parabolic(i, sign);
      heights_[i] = (heights_[i - 1] < candidate && candidate < heights_[i + 1])
                        ? candidate
                        : linear(i, sign);
      positions_[i] += sign;
    }
  }
}

double StreamingQuantile::value() const {
  if (count_ == 0) throw ValidationError("streaming quantile: no observations");
  if (count_ < 5) {
    std::array<double, 5> sorted = heights_;
    std::sort(sorted.begin(), sorted.begin() + count_);
    const auto rank = nearest_rank(q_, static_cast<std::size_t>(count_));
    return sorted[rank - 1];
  }
  return heights_[2];
}

}  // namespace quotascan
