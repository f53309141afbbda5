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
#include "degcorr/correlations.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "degcorr/concordance.h"
#include "degcorr/errors.h"
#include "degcorr/ranks.h"
#include "degcorr/seed.h"
#include "dominance.h"

namespace degcorr {
namespace {

__extension__ using int128 = __int128;

void RequireEdges(std::size_t m, std::size_t required) {
  if (m < required) throw InsufficientEdgesError(required, m);
}

long double ToLongDouble(int128 v) { return static_cast<long double>(v); }

double Clamp(long double v) {
  return static_cast<double>(std::clamp<long double>(v, -1.0L, 1.0L));
}

// m (m + 1)^2.
int128 RankOffset(std::size_t m) {
  const auto mm = static_cast<int128>(m);
  return mm * (mm + 1) * (mm + 1);
}

}  // namespace

bool IsConstant(std::span<const std::int64_t> values) {
  return std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) ==
         values.end();
}

double SpearmanFromRanks(std::span<const std::int64_t> source_ranks,
                         std::span<const std::int64_t> target_ranks) {
  const std::size_t m = source_ranks.size();
  RequireEdges(m, 2);
  int128 cross = 0;
  for (std::size_t e = 0; e < m; ++e) {
    cross += static_cast<int128>(source_ranks[e]) * target_ranks[e];
  }
  const auto mm = static_cast<int128>(m);
  const int128 numerator = 12 * cross - 3 * RankOffset(m);
  const int128 denominator = mm * mm * mm - mm;
  return Clamp(ToLongDouble(numerator) / ToLongDouble(denominator));
}

double UniformRankSpearman(const EdgeDegreeView& view, std::uint64_t seed) {
  RequireEdges(view.size(), 2);
  const auto rs = UniformTieBreakRanks(
      view.source, DeriveSeed(seed, {Tag(SeedPurpose::kSourceNoise)}));
  const auto rt = UniformTieBreakRanks(
      view.target, DeriveSeed(seed, {Tag(SeedPurpose::kTargetNoise)}));
  return SpearmanFromRanks(rs, rt);
}

double UniformRankSpearman(const DirectedMultigraph& g, DegreeTypePair pair,
                           std::uint64_t seed) {
  return UniformRankSpearman(DegreesAtEdges(g, pair), seed);
}

double MeanUniformRankSpearman(const EdgeDegreeView& view, std::uint64_t seed,
                               std::size_t replicas) {
  RequireEdges(view.size(), 2);
  if (replicas == 0) replicas = 1;
  const TieBreakRanker source(view.source);
  const TieBreakRanker target(view.target);
  double sum = 0.0;
  for (std::size_t r = 0; r < replicas; ++r) {
    const std::uint64_t s =
        r == 0 ? seed : DeriveSeed(seed, {r, Tag(SeedPurpose::kTieBreakReplica)});
    const auto rs = source.Ranks(
        TieBreakNoise(view.size(), DeriveSeed(s, {Tag(SeedPurpose::kSourceNoise)})));
    const auto rt = target.Ranks(
        TieBreakNoise(view.size(), DeriveSeed(s, {Tag(SeedPurpose::kTargetNoise)})));
    sum += SpearmanFromRanks(rs, rt);
  }
  return sum / static_cast<double>(replicas);
}

std::optional<double> AverageRankSpearman(const EdgeDegreeView& view) {
  const std::size_t m = view.size();
  RequireEdges(m, 2);
  const auto rs = DoubledAverageRanks(view.source);
  const auto rt = DoubledAverageRanks(view.target);
  int128 cross = 0;
  int128 ss = 0;
  int128 tt = 0;
  for (std::size_t e = 0; e < m; ++e) {
    cross += static_cast<int128>(rs[e]) * rt[e];
    ss += static_cast<int128>(rs[e]) * rs[e];
    tt += static_cast<int128>(rt[e]) * rt[e];
  }
  const int128 offset = RankOffset(m);
  const int128 var_s = ss - offset;
  const int128 var_t = tt - offset;
  if (var_s == 0 || var_t == 0) return std::nullopt;
  const long double denominator =
      var_s == var_t ? ToLongDouble(var_s)
                     : std::sqrt(ToLongDouble(var_s) * ToLongDouble(var_t));
  return Clamp(ToLongDouble(cross - offset) / denominator);
}

std::optional<double> AverageRankSpearman(const DirectedMultigraph& g, DegreeTypePair pair) {
  return AverageRankSpearman(DegreesAtEdges(g, pair));
}

double EdgeKendallTau(const EdgeDegreeView& view) {
  const std::size_t m = view.size();
  RequireEdges(m, 2);
  const ConcordanceCounts c = CountConcordance(view.source, view.target);
  const int128 diff = static_cast<int128>(c.concordant) - static_cast<int128>(c.discordant);
  const auto mm = static_cast<int128>(m);
  return Clamp(ToLongDouble(2 * diff) / ToLongDouble(mm * (mm - 1)));
}

double EdgeKendallTau(const DirectedMultigraph& g, DegreeTypePair pair) {
  return EdgeKendallTau(DegreesAtEdges(g, pair));
}

std::optional<double> EdgePearson(const EdgeDegreeView& view) {
  const std::size_t m = view.size();
  RequireEdges(m, 2);
  if (IsConstant(view.source) || IsConstant(view.target)) return std::nullopt;
  int128 sx = 0;
  int128 sy = 0;
  int128 sxx = 0;
  int128 syy = 0;
  int128 sxy = 0;
  for (std::size_t e = 0; e < m; ++e) {
    const int128 x = view.source[e];
    const int128 y = view.target[e];
    sx += x;
    sy += y;
    sxx += x * x;
    syy += y * y;
    sxy += x * y;
  }
  const auto mm = static_cast<int128>(m);
  const int128 cov = mm * sxy - sx * sy;
  const int128 vx = mm * sxx - sx * sx;
  const int128 vy = mm * syy - sy * sy;
  const long double denominator =
      vx == vy ? ToLongDouble(vx) : std::sqrt(ToLongDouble(vx) * ToLongDouble(vy));
  return Clamp(ToLongDouble(cov) / denominator);
}

std::optional<double> EdgePearson(const DirectedMultigraph& g, DegreeTypePair pair) {
  return EdgePearson(DegreesAtEdges(g, pair));
}

double EdgeSpearmanFromDistributions(const EdgeDegreeView& view) {
  const std::size_t m = view.size();
  RequireEdges(m, 1);
  const auto fs = MidCdfCounts(view.source);
  const auto ft = MidCdfCounts(view.target);
  int128 sum = 0;
  for (std::size_t e = 0; e < m; ++e) sum += static_cast<int128>(fs[e]) * ft[e];
  const auto mm = static_cast<int128>(m);
  // E[F F] = sum / m^3.
  return static_cast<double>(3.0L * ToLongDouble(sum - mm * mm * mm) /
                             ToLongDouble(mm * mm * mm));
}

double EdgeSpearmanFromDistributions(const DirectedMultigraph& g, DegreeTypePair pair) {
  return EdgeSpearmanFromDistributions(DegreesAtEdges(g, pair));
}

double EdgeKendallFromDistributions(const EdgeDegreeView& view) {
  const std::size_t m = view.size();
  RequireEdges(m, 1);
  const std::vector<std::int64_t> ones(m, 1);
  const auto dom = internal::DominanceSums<std::int64_t>(view.source, view.target, ones);
  int128 sum = 0;
  for (const auto& d : dom) sum += d.le_le + d.lt_le + d.le_lt + d.lt_lt;
  const auto mm = static_cast<int128>(m);
  // E[H | G] = sum / m^2.
  return static_cast<double>(ToLongDouble(sum - mm * mm) / ToLongDouble(mm * mm));
}

double EdgeKendallFromDistributions(const DirectedMultigraph& g, DegreeTypePair pair) {
  return EdgeKendallFromDistributions(DegreesAtEdges(g, pair));
}

}  // namespace degcorr
