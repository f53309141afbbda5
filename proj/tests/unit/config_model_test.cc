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
#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <gtest/gtest.h>

#include "degcorr/config_model.h"
#include "degcorr/digraph.h"
#include "degcorr/errors.h"
#include "degcorr/laws.h"
#include "degcorr/seed.h"

namespace degcorr {
namespace {

using Values = std::vector<std::int64_t>;

std::int64_t Sum(const Values& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

Values Degrees(const DirectedMultigraph& g, DegreeType t) {
  return {g.degrees(t).begin(), g.degrees(t).end()};
}

GenerationResult FromPairing(Values out, Values in, std::vector<Edge> edges) {
  GenerationResult r;
  r.bidegree.out_stubs = std::move(out);
  r.bidegree.in_stubs = std::move(in);
  r.graph = DirectedMultigraph::FromEdges(std::move(edges), r.bidegree.node_count());
  return r;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v.size() % 2 ? v[v.size() / 2] : 0.5 * (v[v.size() / 2 - 1] + v[v.size() / 2]);
}

TEST(BiDegreeTest, PointMassIsAlreadyBalanced) {
  const auto b = SampleBiDegree(5, Pmf::PointMass(1), Pmf::PointMass(1), 3);
  EXPECT_EQ(b.out_stubs, Values(5, 1));
  EXPECT_EQ(b.in_stubs, Values(5, 1));
  EXPECT_EQ(b.balance_added, 0);
  EXPECT_FALSE(b.means_mismatched);
}

TEST(BiDegreeTest, BalancedAndReproducible) {
  const Pmf poi = ParseLaw("poisson:3");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto b = SampleBiDegree(200, poi, ParseLaw("geometric:0.25"), seed);
    EXPECT_EQ(Sum(b.out_stubs), Sum(b.in_stubs));
    EXPECT_EQ(b.total_stubs(), Sum(b.out_stubs));
    const auto again = SampleBiDegree(200, poi, ParseLaw("geometric:0.25"), seed);
    EXPECT_EQ(b.out_stubs, again.out_stubs);
    EXPECT_EQ(b.in_stubs, again.in_stubs);
  }
}

Pmf Histogram(const std::vector<std::int64_t>& values) {
  std::map<std::int64_t, std::uint64_t> counts;
  for (auto v : values) ++counts[v];
  const std::vector<std::pair<std::int64_t, std::uint64_t>> pairs(counts.begin(), counts.end());
  return Pmf::FromCounts(pairs);
}

TEST(BiDegreeTest, PoissonStubsFollowTheLaw) {
  const Pmf poi = ParseLaw("poisson:3");
  const auto b = SampleBiDegree(10000, poi, poi, 11);
  EXPECT_LT(static_cast<double>(b.balance_added) / 10000, 0.05);
  EXPECT_LE(TotalVariation(Histogram(b.out_stubs), poi), 0.05);
  EXPECT_LE(TotalVariation(Histogram(b.in_stubs), poi), 0.05);
}

TEST(BiDegreeTest, FlagsMismatchedMeans) {
  EXPECT_TRUE(SampleBiDegree(50, ParseLaw("poisson:3"), ParseLaw("poisson:6"), 1).means_mismatched);
}

TEST(BiDegreeTest, Errors) {
  EXPECT_THROW(SampleBiDegree(0, Pmf::PointMass(1), Pmf::PointMass(1), 0), std::invalid_argument);
  EXPECT_THROW(SampleBiDegree(10, Pmf::PointMass(0), Pmf::PointMass(0), 0), std::invalid_argument);
  EXPECT_THROW(SampleBiDegree(10, Pmf::PointMass(-1), Pmf::PointMass(1), 0),
               std::invalid_argument);
}

TEST(PairStubsTest, ForcedPairings) {
  BiDegreeSequence loop{{1}, {1}};
  const auto self = PairStubs(loop, 0).graph;
  EXPECT_EQ(std::vector<Edge>(self.edges().begin(), self.edges().end()),
            (std::vector<Edge>{{0, 0}}));
  BiDegreeSequence one{{1, 0}, {0, 1}};
  const auto g = PairStubs(one, 5).graph;
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
}

TEST(PairStubsTest, UniformMatching) {
  // Out slots (0, 0, 1) against in slots (0, 1, 1): node 1's single out-stub
  // meets node 0's in-stub in 2 of the 6 equally likely matchings.
  BiDegreeSequence b{{2, 1}, {1, 2}};
  const int n = 30000;
  int hits = 0;
  for (int s = 0; s < n; ++s) hits += PairStubs(b, s).graph.Multiplicity(1, 0);
  EXPECT_NEAR(hits / double(n), 1.0 / 3, 0.015);
}

TEST(CmTest, DegreesEqualStubs) {
  const Pmf z = ParseLaw("zeta:2.5");
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto r = GenerateCm(2000, z, z, seed);
    EXPECT_EQ(Degrees(r.graph, DegreeType::kOut), r.bidegree.out_stubs);
    EXPECT_EQ(Degrees(r.graph, DegreeType::kIn), r.bidegree.in_stubs);
    EXPECT_EQ(static_cast<std::int64_t>(r.graph.edge_count()), r.bidegree.total_stubs());
    EXPECT_EQ(r.ledger.total_erased(), 0);
  }
}

TEST(CmTest, EndpointMarginalsApproachLimits) {
  const Pmf poi = ParseLaw("poisson:3");
  const auto r = GenerateCm(10000, poi, poi, 21);
  for (DegreeTypePair pair : DegreeTypePair::All()) {
    const auto [src, tgt] = LimitingEndpointLaws(pair, poi, poi);
    EXPECT_LE(TotalVariation(EmpiricalEndpointMarginal(r.graph, EdgeSide::kSource, pair.source),
                             src),
              0.05)
        << pair.Name();
    EXPECT_LE(TotalVariation(EmpiricalEndpointMarginal(r.graph, EdgeSide::kTarget, pair.target),
                             tgt),
              0.05)
        << pair.Name();
  }
}

TEST(RcmTest, TwoNodeCycle) {
  double attempts = 0;
  const int runs = 2000;
  for (int s = 0; s < runs; ++s) {
    const auto r = GenerateRcm(2, Pmf::PointMass(1), Pmf::PointMass(1), 100, s);
    ASSERT_TRUE(IsSimple(r.graph));
    ASSERT_EQ(r.graph.Multiplicity(0, 1), 1u);
    ASSERT_EQ(r.graph.Multiplicity(1, 0), 1u);
    attempts += static_cast<double>(r.attempts);
  }
  EXPECT_NEAR(attempts / runs, 2.0, 0.15);
}

TEST(RcmTest, ForcedCollisionFails) {
  try {
    GenerateRcm(1, Pmf::PointMass(1), Pmf::PointMass(1), 1, 0);
    FAIL();
  } catch (const GenerationError& e) {
    EXPECT_EQ(e.attempts(), 1u);
  }
}

TEST(RcmTest, PoissonSucceedsAndIsSimple) {
  const Pmf poi = ParseLaw("poisson:3");
  double attempts = 0;
  const int runs = 100;
  for (int s = 0; s < runs; ++s) {
    const auto r = GenerateRcm(1000, poi, poi, 100000, s);
    ASSERT_TRUE(IsSimple(r.graph));
    ASSERT_EQ(Degrees(r.graph, DegreeType::kOut), r.bidegree.out_stubs);
    ASSERT_EQ(Degrees(r.graph, DegreeType::kIn), r.bidegree.in_stubs);
    attempts += static_cast<double>(r.attempts);
  }
  EXPECT_GT(runs / attempts, 1e-4);
}

TEST(RcmTest, ReusesOneBiDegree) {
  const Pmf poi = ParseLaw("poisson:2");
  const auto r = GenerateRcm(300, poi, poi, 100000, 8);
  const auto b = SampleBiDegree(300, poi, poi, DeriveSeed(8, {Tag(SeedPurpose::kBiDegree)}));
  EXPECT_EQ(r.bidegree.out_stubs, b.out_stubs);
  EXPECT_EQ(r.bidegree.in_stubs, b.in_stubs);
}

TEST(EcmTest, SelfLoopErasure) {
  const auto r = EraseToSimple(FromPairing({2, 0}, {1, 1}, {{0, 0}, {0, 1}}));
  ASSERT_EQ(r.graph.edge_count(), 1u);
  EXPECT_EQ(r.graph.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(r.ledger.erased_out, (Values{1, 0}));
  EXPECT_EQ(r.ledger.erased_in, (Values{1, 0}));
  EXPECT_EQ(r.ledger.self_loops_removed, 1);
  EXPECT_EQ(r.ledger.multi_edges_merged, 0);
}

TEST(EcmTest, MultiEdgeMerge) {
  const auto r = EraseToSimple(FromPairing({2, 0}, {0, 2}, {{0, 1}, {0, 1}}));
  ASSERT_EQ(r.graph.edge_count(), 1u);
  EXPECT_EQ(r.ledger.multi_edges_merged, 1);
  EXPECT_EQ(r.ledger.self_loops_removed, 0);
  EXPECT_EQ(r.ledger.erased_out, (Values{1, 0}));
  EXPECT_EQ(r.ledger.erased_in, (Values{0, 1}));
}

TEST(EcmTest, LedgerBalancesAndGraphIsSimple) {
  const Pmf z = ParseLaw("zeta:2.1");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto r = GenerateEcm(3000, z, z, seed);
    EXPECT_TRUE(IsSimple(r.graph));
    const auto& l = r.ledger;
    EXPECT_EQ(Sum(l.erased_out), l.total_erased());
    EXPECT_EQ(Sum(l.erased_in), l.total_erased());
    EXPECT_EQ(r.bidegree.total_stubs() - static_cast<std::int64_t>(r.graph.edge_count()),
              l.total_erased());
    const auto out = Degrees(r.graph, DegreeType::kOut);
    const auto in = Degrees(r.graph, DegreeType::kIn);
    for (std::size_t v = 0; v < out.size(); ++v) {
      ASSERT_EQ(out[v] + l.erased_out[v], r.bidegree.out_stubs[v]);
      ASSERT_EQ(in[v] + l.erased_in[v], r.bidegree.in_stubs[v]);
    }
  }
}

TEST(EcmTest, PoissonDegreesAndEdgeDensity) {
  const Pmf poi = ParseLaw("poisson:3");
  const auto r = GenerateEcm(10000, poi, poi, 4);
  EXPECT_LE(TotalVariation(EmpiricalNodeDegrees(r.graph, DegreeType::kOut), poi), 0.05);
  EXPECT_LE(TotalVariation(EmpiricalNodeDegrees(r.graph, DegreeType::kIn), poi), 0.05);
  EXPECT_NEAR(static_cast<double>(r.graph.edge_count()) / 10000, 3.0, 0.1);
}

TEST(EcmTest, ErasedFractionShrinksWithSize) {
  const Pmf z = ParseLaw("zeta:2.5");
  auto median_fraction = [&](std::size_t n) {
    std::vector<double> f;
    for (std::uint64_t r = 0; r < 10; ++r) {
      const auto erased = GenerateEcm(n, z, z, DeriveSeed(n, {r})).ledger.total_erased();
      f.push_back(static_cast<double>(erased) / static_cast<double>(n));
    }
    return Median(f);
  };
  EXPECT_LT(median_fraction(10000), median_fraction(1000));
}

TEST(EcmTest, Reproducible) {
  const Pmf z = ParseLaw("zeta:2.5");
  const auto a = GenerateEcm(1000, z, z, 7);
  const auto b = GenerateEcm(1000, z, z, 7);
  EXPECT_TRUE(std::equal(a.graph.edges().begin(), a.graph.edges().end(), b.graph.edges().begin(),
                         b.graph.edges().end()));
}

TEST(LimitingLawsTest, TableRows) {
  const Pmf xi = Pmf::FromPairs({{1, 0.5}, {2, 0.5}});
  const Pmf gamma = Pmf::FromPairs({{0, 0.25}, {3, 0.75}});
  const auto [oi_s, oi_t] = LimitingEndpointLaws({DegreeType::kOut, DegreeType::kIn}, xi, gamma);
  EXPECT_NEAR(oi_s.Probability(1), 1.0 / 3, 1e-15);
  EXPECT_NEAR(oi_s.Probability(2), 2.0 / 3, 1e-15);
  EXPECT_TRUE(oi_t.IsPointMass());
  EXPECT_EQ(oi_t.min(), 3);
  const auto [io_s, io_t] = LimitingEndpointLaws({DegreeType::kIn, DegreeType::kOut}, xi, gamma);
  EXPECT_EQ(io_s, gamma);
  EXPECT_EQ(io_t, xi);
  const auto [oo_s, oo_t] = LimitingEndpointLaws({DegreeType::kOut, DegreeType::kOut}, xi, gamma);
  EXPECT_EQ(oo_s, SizeBiased(xi));
  EXPECT_EQ(oo_t, xi);
  const auto [ii_s, ii_t] = LimitingEndpointLaws({DegreeType::kIn, DegreeType::kIn}, xi, gamma);
  EXPECT_EQ(ii_s, gamma);
  EXPECT_EQ(ii_t, SizeBiased(gamma));
}

TEST(LimitingLawsTest, PointMassesStayPointMasses) {
  for (DegreeTypePair pair : DegreeTypePair::All()) {
    const auto [s, t] = LimitingEndpointLaws(pair, Pmf::PointMass(2), Pmf::PointMass(2));
    EXPECT_EQ(s, Pmf::PointMass(2));
    EXPECT_EQ(t, Pmf::PointMass(2));
  }
}

}  // namespace
}  // namespace degcorr
