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
#include "degcorr/ranks.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "degcorr/random.h"

namespace degcorr {
namespace {

void RequireNonEmpty(std::size_t m) {
  if (m == 0) throw std::invalid_argument("rank input is empty");
}

// Indices sorted by value ascending, ties by index. Counting sort when the
// value range is at most about twice the length.
std::vector<std::size_t> AscendingOrder(std::span<const std::int64_t> values) {
  std::vector<std::size_t> order(values.size());
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const auto range = static_cast<std::uint64_t>(*hi) - static_cast<std::uint64_t>(*lo);
  if (range <= 2 * static_cast<std::uint64_t>(values.size()) + 1024) {
    std::vector<std::size_t> next(range + 2, 0);
    for (std::int64_t v : values) ++next[static_cast<std::size_t>(v - *lo) + 1];
    std::partial_sum(next.begin(), next.end(), next.begin());
    for (std::size_t i = 0; i < values.size(); ++i) {
      order[next[static_cast<std::size_t>(values[i] - *lo)]++] = i;
    }
    return order;
  }
  std::vector<std::pair<std::int64_t, std::size_t>> keyed(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) keyed[i] = {values[i], i};
  std::sort(keyed.begin(), keyed.end());
  for (std::size_t i = 0; i < keyed.size(); ++i) order[i] = keyed[i].second;
  return order;
}

// Calls fn(less, equal, group) for every tie group, ascending.
template <typename Fn>
void ForEachTieGroup(std::span<const std::int64_t> values,
                     const std::vector<std::size_t>& order, Fn fn) {
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t stop = start;
    while (stop < order.size() && values[order[stop]] == values[order[start]]) ++stop;
    fn(static_cast<std::int64_t>(start), static_cast<std::int64_t>(stop - start),
       std::span<const std::size_t>(order.data() + start, stop - start));
    start = stop;
  }
}

}  // namespace

TieBreakRanker::TieBreakRanker(std::span<const std::int64_t> values) {
  RequireNonEmpty(values.size());
  const std::vector<std::size_t> ascending = AscendingOrder(values);
  std::vector<std::span<const std::size_t>> groups;
  ForEachTieGroup(values, ascending,
                  [&](std::int64_t, std::int64_t, auto group) { groups.push_back(group); });
  order_.reserve(values.size());
  group_starts_.reserve(groups.size() + 1);
  for (auto g = groups.rbegin(); g != groups.rend(); ++g) {
    group_starts_.push_back(order_.size());
    order_.insert(order_.end(), g->begin(), g->end());
  }
  group_starts_.push_back(values.size());
}

std::vector<std::int64_t> TieBreakRanker::Ranks(std::span<const std::uint64_t> noise) const {
  if (noise.size() != size()) throw std::invalid_argument("noise and values differ in length");
  std::vector<std::int64_t> ranks(size());
  std::vector<std::pair<std::uint64_t, std::size_t>> group;
  for (std::size_t g = 0; g + 1 < group_starts_.size(); ++g) {
    const std::size_t start = group_starts_[g];
    const std::size_t stop = group_starts_[g + 1];
    if (stop - start == 1) {
      ranks[order_[start]] = static_cast<std::int64_t>(start) + 1;
      continue;
    }
    // Complemented noise sorts larger noise first.
    group.clear();
    for (std::size_t pos = start; pos < stop; ++pos) {
      group.emplace_back(~noise[order_[pos]], order_[pos]);
    }
    std::sort(group.begin(), group.end());
    for (std::size_t k = 0; k < group.size(); ++k) {
      ranks[group[k].second] = static_cast<std::int64_t>(start + k) + 1;
    }
  }
  return ranks;
}

std::vector<std::int64_t> RanksWithNoise(std::span<const std::int64_t> values,
                                         std::span<const std::uint64_t> noise) {
  RequireNonEmpty(values.size());
  if (noise.size() != values.size()) {
    throw std::invalid_argument("noise and values differ in length");
  }
  return TieBreakRanker(values).Ranks(noise);
}

std::vector<std::uint64_t> TieBreakNoise(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint64_t> noise(count);
  for (auto& u : noise) u = rng();
  return noise;
}

std::vector<std::int64_t> UniformTieBreakRanks(std::span<const std::int64_t> values,
                                               std::uint64_t seed) {
  RequireNonEmpty(values.size());
  const auto noise = TieBreakNoise(values.size(), seed);
  return RanksWithNoise(values, noise);
}

std::vector<std::int64_t> DoubledAverageRanks(std::span<const std::int64_t> values) {
  RequireNonEmpty(values.size());
  const auto m = static_cast<std::int64_t>(values.size());
  std::vector<std::int64_t> ranks(values.size());
  ForEachTieGroup(values, AscendingOrder(values),
                  [&](std::int64_t less, std::int64_t equal, auto group) {
                    const std::int64_t greater = m - less - equal;
                    for (std::size_t i : group) ranks[i] = 1 + 2 * greater + equal;
                  });
  return ranks;
}

std::vector<double> AverageRanks(std::span<const std::int64_t> values) {
  const auto doubled = DoubledAverageRanks(values);
  std::vector<double> ranks(doubled.size());
  std::transform(doubled.begin(), doubled.end(), ranks.begin(),
                 [](std::int64_t r) { return 0.5 * static_cast<double>(r); });
  return ranks;
}

std::vector<std::int64_t> MidCdfCounts(std::span<const std::int64_t> values) {
  RequireNonEmpty(values.size());
  std::vector<std::int64_t> counts(values.size());
  ForEachTieGroup(values, AscendingOrder(values),
                  [&](std::int64_t less, std::int64_t equal, auto group) {
                    for (std::size_t i : group) counts[i] = 2 * less + equal;
                  });
  return counts;
}

}  // namespace degcorr
