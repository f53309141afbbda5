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
#ifndef DEGCORR_CORRELATIONS_H_
#define DEGCORR_CORRELATIONS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "degcorr/digraph.h"

// Degree-degree dependency estimators over the edge occurrences of a directed
// multigraph. Every estimator has an EdgeDegreeView form (degree pairs as an
// edge multiset) and a graph form that builds the view for a DegreeTypePair.
// Estimators that need |E| >= 2 throw InsufficientEdgesError otherwise.

namespace degcorr {

// Spearman's rho from explicit descending rank vectors (permutations of
// 1..m): (12 sum Rs Rt - 3 m (m + 1)^2) / (m^3 - m), with exact integer sums.
double SpearmanFromRanks(std::span<const std::int64_t> source_ranks,
                         std::span<const std::int64_t> target_ranks);

// Spearman's rho with ties broken by two independent noise vectors, one for
// the source side and one for the target side, both derived from `seed`.
double UniformRankSpearman(const EdgeDegreeView& view, std::uint64_t seed);
double UniformRankSpearman(const DirectedMultigraph& g, DegreeTypePair pair,
                           std::uint64_t seed);

// Mean of UniformRankSpearman over `replicas` tie-break draws. Replica 0
// uses `seed` itself, so replicas == 1 reproduces the single draw.
double MeanUniformRankSpearman(const EdgeDegreeView& view, std::uint64_t seed,
                               std::size_t replicas);

// Spearman's rho on average ranks. nullopt when either side is constant
// (the normalizing variance is zero).
std::optional<double> AverageRankSpearman(const EdgeDegreeView& view);
std::optional<double> AverageRankSpearman(const DirectedMultigraph& g, DegreeTypePair pair);

// 2 (N_C - N_D) / (m (m - 1)); no tie correction.
double EdgeKendallTau(const EdgeDegreeView& view);
double EdgeKendallTau(const DirectedMultigraph& g, DegreeTypePair pair);

// Sample Pearson correlation of the degree pairs. Moments are accumulated
// exactly in 128-bit integers. nullopt when either side is constant.
std::optional<double> EdgePearson(const EdgeDegreeView& view);
std::optional<double> EdgePearson(const DirectedMultigraph& g, DegreeTypePair pair);

// 3 E[F_s(X) F_t(Y) | G] - 3 using the empirical endpoint laws, where
// F(k) stands for F(k) + F(k - 1). Needs |E| >= 1.
double EdgeSpearmanFromDistributions(const EdgeDegreeView& view);
double EdgeSpearmanFromDistributions(const DirectedMultigraph& g, DegreeTypePair pair);

// E[H(X, Y) + H(X-1, Y) + H(X, Y-1) + H(X-1, Y-1) | G] - 1 on the empirical
// joint law. Equals EdgeKendallTau * (m - 1) / m. Needs |E| >= 1.
double EdgeKendallFromDistributions(const EdgeDegreeView& view);
double EdgeKendallFromDistributions(const DirectedMultigraph& g, DegreeTypePair pair);

// True when all entries are equal (or there are none).
bool IsConstant(std::span<const std::int64_t> values);

}  // namespace degcorr

#endif  // DEGCORR_CORRELATIONS_H_
