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

#include "quotascan/rng.hpp"

namespace quotascan::rng {

namespace {

constexpr std::uint32_t kMultA = 0xD2511F53;
constexpr std::uint32_t kMultB = 0xCD9E8D57;
constexpr std::uint32_t kWeylA = 0x9E3779B9;
constexpr std::uint32_t kWeylB = 0xBB67AE85;

inline void round_once(Block& x, const Key& k) noexcept {
  const std::uint64_t p0 = static_cast<std::uint64_t>(kMultA) * x[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kMultB) * x[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
}

}  // namespace

Block philox4x32_10(Block counter, Key key) noexcept {
  for (int r = 0; r < 10; ++r) {
    round_once(counter, key);
    if (r != 9) {
      key[0] += kWeylA;
      key[1] += kWeylB;
    }
  }
  return counter;
}

}  // namespace quotascan::rng
