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

#ifndef QUOTASCAN_RNG_HPP
#define QUOTASCAN_RNG_HPP

#include <array>
#include <cstdint>

namespace quotascan::rng {

using Block = std::array<std::uint32_t, 4>;
using Key = std::array<std::uint32_t, 2>;

// Philox-4x32, 10 rounds (Salmon et al., "Parallel random numbers: as easy
// as 1, 2, 3", SC'11). Counter-based: the output is a pure function of
// (counter, key), so streams can be addressed rather than advanced.
// Verified against the reference known-answer vectors.
Block philox4x32_10(Block counter, Key key) noexcept;

/// A deterministic uniform stream addressed by (seed, replication, stratum,
/// department). The seed forms the Philox key; the address forms the first
/// three counter words and the fourth counts draws within the stream. Any
/// two distinct addresses yield independent streams, which makes parallel
/// sampling reproducible regardless of how work is partitioned.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint32_t replication, std::uint32_t stratum,
         std::uint32_t department) noexcept
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        counter_{replication, stratum, department, 0} {}

  std::uint64_t next_u64() noexcept {
    Block out = philox4x32_10(counter_, key_);
    ++counter_[3];
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
  }

  /// 53-bit uniform in [0, 1).
  double next_uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi] (inclusive).
  int next_int(int lo, int hi) noexcept {
    const double span = static_cast<double>(hi) - static_cast<double>(lo) + 1.0;
    int v = lo + static_cast<int>(next_uniform() * span);
    return v > hi ? hi : v;
  }

 private:
  Key key_;
  Block counter_;
};

}  // namespace quotascan::rng

#endif  // QUOTASCAN_RNG_HPP
