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
#ifndef DEGCORR_SRC_DOMINANCE_H_
#define DEGCORR_SRC_DOMINANCE_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace degcorr::internal {

// Fenwick tree over positions [0, n).
template <typename W>
class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, W{}) {}

  void Add(std::size_t pos, W w) {
    for (std::size_t i = pos + 1; i < tree_.size(); i += i & (~i + 1)) tree_[i] += w;
  }

  // Sum over positions [0, pos).
  W Prefix(std::size_t pos) const {
    W s{};
    for (std::size_t i = pos; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<W> tree_;
};

// Weighted mass dominated by a query point, in the four tie conventions.
template <typename W>
struct Dominance {
  W le_le{};  // x' <= x, y' <= y
  W lt_le{};  // x' <  x, y' <= y
  W le_lt{};  // x' <= x, y' <  y
  W lt_lt{};  // x' <  x, y' <  y
};

// For every point i, sums w over all points j (including i) in each of the
// four dominance relations. O(m log m).
template <typename W>
std::vector<Dominance<W>> DominanceSums(std::span<const std::int64_t> x,
                                        std::span<const std::int64_t> y,
                                        std::span<const W> w) {
  const std::size_t m = x.size();
  std::vector<std::int64_t> ys(y.begin(), y.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  std::vector<std::size_t> rank(m);
  for (std::size_t i = 0; i < m; ++i) {
    rank[i] = static_cast<std::size_t>(
        std::lower_bound(ys.begin(), ys.end(), y[i]) - ys.begin());
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

  Fenwick<W> tree(ys.size());
  std::vector<Dominance<W>> out(m);
  std::size_t start = 0;
  while (start < m) {
    std::size_t stop = start;
    while (stop < m && x[order[stop]] == x[order[start]]) ++stop;
    for (std::size_t g = start; g < stop; ++g) {
      const std::size_t i = order[g];
      out[i].lt_le = tree.Prefix(rank[i] + 1);
      out[i].lt_lt = tree.Prefix(rank[i]);
    }
    for (std::size_t g = start; g < stop; ++g) tree.Add(rank[order[g]], w[order[g]]);
    for (std::size_t g = start; g < stop; ++g) {
      const std::size_t i = order[g];
      out[i].le_le = tree.Prefix(rank[i] + 1);
      out[i].le_lt = tree.Prefix(rank[i]);
    }
    start = stop;
  }
  return out;
}

}  // namespace degcorr::internal

#endif  // DEGCORR_SRC_DOMINANCE_H_
