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
#include "degcorr/concordance.h"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace degcorr {
namespace {

void RequireSameLength(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("concordance inputs differ in length");
}

std::uint64_t TiedPairs(std::uint64_t run) { return run * (run - 1) / 2; }

// Sorts v ascending and returns the number of strict inversions.
std::uint64_t MergeSortInversions(std::vector<std::int64_t>& v) {
  std::vector<std::int64_t> buffer(v.size());
  std::uint64_t inversions = 0;
  for (std::size_t width = 1; width < v.size(); width *= 2) {
    for (std::size_t lo = 0; lo < v.size(); lo += 2 * width) {
      const std::size_t mid = std::min(lo + width, v.size());
      const std::size_t hi = std::min(lo + 2 * width, v.size());
      std::size_t i = lo;
      std::size_t j = mid;
      std::size_t k = lo;
      while (i < mid && j < hi) {
        if (v[j] < v[i]) {
          inversions += mid - i;
          buffer[k++] = v[j++];
        } else {
          buffer[k++] = v[i++];
        }
      }
      while (i < mid) buffer[k++] = v[i++];
      while (j < hi) buffer[k++] = v[j++];
    }
    std::swap(v, buffer);
  }
  return inversions;
}

}  // namespace

ConcordanceCounts CountConcordance(std::span<const std::int64_t> x,
                                   std::span<const std::int64_t> y) {
  RequireSameLength(x.size(), y.size());
  const std::size_t m = x.size();
  if (m < 2) return {};

  std::vector<std::pair<std::int64_t, std::int64_t>> xy(m);
  for (std::size_t i = 0; i < m; ++i) xy[i] = {x[i], y[i]};
  std::sort(xy.begin(), xy.end());

  std::uint64_t tied_x = 0;
  std::uint64_t tied_xy = 0;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && xy[j].first == xy[i].first) ++j;
    tied_x += TiedPairs(j - i);
    for (std::size_t a = i; a < j;) {
      std::size_t b = a;
      while (b < j && xy[b].second == xy[a].second) ++b;
      tied_xy += TiedPairs(b - a);
      a = b;
    }
    i = j;
  }

  std::vector<std::int64_t> ys(m);
  for (std::size_t i = 0; i < m; ++i) ys[i] = xy[i].second;
  // Within an x tie group y is already ascending, so every inversion pairs
  // a strictly smaller x with a strictly larger y.
  const std::uint64_t discordant = MergeSortInversions(ys);

  std::uint64_t tied_y = 0;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && ys[j] == ys[i]) ++j;
    tied_y += TiedPairs(j - i);
    i = j;
  }

  const std::uint64_t total = TiedPairs(m);
  return {total - tied_x - tied_y + tied_xy - discordant, discordant};
}

ConcordanceCounts CountConcordanceNaive(std::span<const std::int64_t> x,
                                        std::span<const std::int64_t> y) {
  RequireSameLength(x.size(), y.size());
  ConcordanceCounts counts;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const std::int64_t dx = x[i] - x[j];
      const std::int64_t dy = y[i] - y[j];
      if ((dx > 0 && dy > 0) || (dx < 0 && dy < 0)) ++counts.concordant;
      if ((dx > 0 && dy < 0) || (dx < 0 && dy > 0)) ++counts.discordant;
    }
  }
  return counts;
}

}  // namespace degcorr
