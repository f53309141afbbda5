// Copyright 2026 The degcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#ifndef DEGCORR_RANDOM_H_
#define DEGCORR_RANDOM_H_

#include <cstdint>
#include <random>

namespace degcorr {

// The one engine used by every generator and estimator in the library.
// Callers own instances; nothing in degcorr holds hidden RNG state.
using Rng = std::mt19937_64;

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace internal {
__extension__ using uint128 = unsigned __int128;
}  // namespace internal

// Uniform integer in [0, bound) by Lemire's multiply-and-reject method.
inline std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  internal::uint128 m = static_cast<internal::uint128>(rng()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<internal::uint128>(rng()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

// Fisher-Yates shuffle on top of UniformBelow.
template <typename RandomIt>
void Shuffle(RandomIt first, RandomIt last, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = n; i > 1; --i) {
    const std::uint64_t j = UniformBelow(rng, i);
    using std::swap;
    swap(first[i - 1], first[j]);
  }
}

}  // namespace degcorr

#endif  // DEGCORR_RANDOM_H_
