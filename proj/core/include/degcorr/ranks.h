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
#ifndef DEGCORR_RANKS_H_
#define DEGCORR_RANKS_H_

#include <cstdint>
#include <span>
#include <vector>

namespace degcorr {

// Descending ranks (1 = largest) with ties ordered by per-entry noise:
// rank[e] = #{f : (v_f, noise_f) >= (v_e, noise_e)} lexicographically, which
// is the uniform tie-break rule with integer noise keys. Equal keys fall back
// to index order. Throws std::invalid_argument on empty input or a size
// mismatch.
std::vector<std::int64_t> RanksWithNoise(std::span<const std::int64_t> values,
                                         std::span<const std::uint64_t> noise);

// Sorts the values once; each Ranks call reorders within tie groups only.
// Ranks(noise) equals RanksWithNoise(values, noise).
class TieBreakRanker {
 public:
  // Throws std::invalid_argument on empty input.
  explicit TieBreakRanker(std::span<const std::int64_t> values);

  std::size_t size() const { return order_.size(); }
  // Throws std::invalid_argument unless noise.size() == size().
  std::vector<std::int64_t> Ranks(std::span<const std::uint64_t> noise) const;

 private:
  std::vector<std::size_t> order_;         // value descending, index ascending
  std::vector<std::size_t> group_starts_;  // plus a final size() sentinel
};

// One i.i.d. noise key per entry, drawn from Rng(seed).
std::vector<std::uint64_t> TieBreakNoise(std::size_t count, std::uint64_t seed);

// RanksWithNoise with TieBreakNoise(values.size(), seed). A permutation of
// 1..m; deterministic in seed.
std::vector<std::int64_t> UniformTieBreakRanks(std::span<const std::int64_t> values,
                                               std::uint64_t seed);

// Twice the average rank, an integer: 1 + 2 #{f : v_f > v_e} + #{f : v_f = v_e}.
std::vector<std::int64_t> DoubledAverageRanks(std::span<const std::int64_t> values);

// Average (mid) ranks, largest value first. Sum is m (m + 1) / 2.
std::vector<double> AverageRanks(std::span<const std::int64_t> values);

// Per entry: #{f : v_f <= v_e} + #{f : v_f < v_e}, i.e. m times the
// empirical F(v_e) + F(v_e - 1).
std::vector<std::int64_t> MidCdfCounts(std::span<const std::int64_t> values);

}  // namespace degcorr

#endif  // DEGCORR_RANKS_H_
