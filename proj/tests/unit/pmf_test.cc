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
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "degcorr/errors.h"
#include "degcorr/laws.h"
#include "degcorr/pmf.h"
#include "degcorr/random.h"
#include "test_util.h"

namespace degcorr {
namespace {

Pmf Bernoulli() { return Pmf::FromPairs({{0, 0.5}, {1, 0.5}}); }

TEST(PmfTest, NormalizesWithinTolerance) {
  const Pmf p = Pmf::FromPairs({{2, 0.3}, {0, 0.7 + 5e-10}});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.min(), 0);
  EXPECT_EQ(p.max(), 2);
  EXPECT_NEAR(p.probs()[0] + p.probs()[1], 1.0, 1e-15);
}

TEST(PmfTest, RejectsBadInput) {
  EXPECT_THROW(Pmf::FromPairs({{0, 0.5}, {1, 0.4}}), std::invalid_argument);
  EXPECT_THROW(Pmf::FromPairs({{0, 1.5}, {1, -0.5}}), std::invalid_argument);
  EXPECT_THROW(Pmf::FromPairs({{0, 0.5}, {0, 0.5}}), std::invalid_argument);
  EXPECT_THROW(Pmf::FromPairs({}), std::invalid_argument);
  EXPECT_THROW(Pmf::FromWeights({{0, 0.0}}), std::invalid_argument);
}

TEST(PmfTest, DropsZeroMass) {
  const Pmf p = Pmf::FromPairs({{0, 0.5}, {1, 0.0}, {2, 0.5}});
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.Probability(1), 0.0);
}

TEST(PmfTest, CdfExamples) {
  EXPECT_EQ(Bernoulli().Cdf(0), 0.5);
  EXPECT_EQ(Bernoulli().Cdf(-1), 0.0);
  const Pmf u = Pmf::FromWeights({{1, 1}, {2, 1}, {3, 1}});
  EXPECT_NEAR(u.Cdf(2), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(u.Cdf(3), 1.0);
  EXPECT_EQ(u.Cdf(100), 1.0);
}

TEST(PmfTest, CdfIsMonotoneAndEndsAtOne) {
  std::mt19937_64 gen(11);
  for (int t = 0; t < 50; ++t) {
    const Pmf p = testing::RandomPmf(gen, 1 + t % 8);
    double prev = 0.0;
    for (std::int64_t k = p.min() - 2; k <= p.max() + 2; ++k) {
      const double c = p.Cdf(k);
      EXPECT_GE(c, prev);
      EXPECT_LE(c, 1.0);
      prev = c;
    }
    EXPECT_EQ(p.Cdf(p.max()), 1.0);
  }
}

TEST(PmfTest, CountsAndPointMass) {
  const std::vector<std::pair<std::int64_t, std::uint64_t>> counts{{1, 1}, {3, 3}};
  const Pmf p = Pmf::FromCounts(counts);
  EXPECT_EQ(p.Probability(3), 0.75);
  EXPECT_EQ(p.Probability(1), 0.25);
  EXPECT_TRUE(Pmf::PointMass(4).IsPointMass());
  EXPECT_EQ(Pmf::PointMass(4).Mean(), 4.0);
}

TEST(PmfTest, SampleFrequencies) {
  const Pmf p = Pmf::FromPairs({{0, 0.2}, {3, 0.5}, {7, 0.3}});
  Rng rng(5);
  std::map<std::int64_t, int> hits;
  const int n = 200000;
  for (int i = 0; i < n; ++i) ++hits[p.Sample(rng)];
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double q = p.probs()[i];
    EXPECT_NEAR(hits[p.support()[i]] / double(n), q, 5 * std::sqrt(q * (1 - q) / n));
  }
  EXPECT_EQ(hits.size(), 3u);
}

TEST(PmfTest, TotalVariation) {
  const Pmf a = Pmf::FromPairs({{0, 0.5}, {1, 0.5}});
  const Pmf b = Pmf::FromPairs({{1, 0.25}, {2, 0.75}});
  EXPECT_NEAR(TotalVariation(a, b), 0.75, 1e-15);
  EXPECT_EQ(TotalVariation(a, a), 0.0);
}

TEST(PmfTest, SizeBiasedPoissonIsShiftedPoisson) {
  const Pmf p = ParseLaw("poisson:3");
  const Pmf s = SizeBiased(p);
  for (std::int64_t k = 1; k < 20; ++k) {
    EXPECT_NEAR(s.Probability(k), p.Probability(k - 1), 1e-12) << k;
  }
  EXPECT_EQ(s.Probability(0), 0.0);
  EXPECT_THROW(SizeBiased(Pmf::PointMass(0)), std::invalid_argument);
}

TEST(JointPmfTest, MarginalsAndCdf) {
  const JointPmf j = JointPmf::FromAtoms({{0, 0, 0.3}, {0, 1, 0.2}, {1, 0, 0.1}, {1, 2, 0.4}});
  EXPECT_NEAR(j.marginal_x().Probability(0), 0.5, 1e-15);
  EXPECT_NEAR(j.marginal_y().Probability(0), 0.4, 1e-15);
  EXPECT_NEAR(j.marginal_y().Probability(2), 0.4, 1e-15);
  EXPECT_NEAR(j.Cdf(0, 1), 0.5, 1e-15);
  EXPECT_NEAR(j.Cdf(1, 0), 0.4, 1e-15);
  EXPECT_EQ(j.Cdf(-1, 5), 0.0);
  EXPECT_NEAR(j.Cdf(5, 5), 1.0, 1e-15);
  EXPECT_THROW(JointPmf::FromAtoms({{0, 0, 0.5}, {0, 0, 0.5}}), std::invalid_argument);
}

TEST(JointPmfTest, ProductFactorizes) {
  const Pmf x = Pmf::FromPairs({{0, 0.25}, {2, 0.75}});
  const Pmf y = Pmf::FromPairs({{1, 0.4}, {3, 0.6}});
  const JointPmf j = JointPmf::Product(x, y);
  EXPECT_EQ(j.size(), 4u);
  for (std::int64_t k = -1; k <= 3; ++k) {
    for (std::int64_t l = 0; l <= 4; ++l) {
      EXPECT_NEAR(j.Cdf(k, l), x.Cdf(k) * y.Cdf(l), 1e-15);
    }
  }
}

TEST(JointPmfTest, RandomMarginalsAreValid) {
  std::mt19937_64 gen(3);
  for (int t = 0; t < 30; ++t) {
    const JointPmf j = testing::RandomJoint(gen, 1 + t % 8, 1 + (t / 3) % 8);
    double sx = 0, sy = 0;
    for (double q : j.marginal_x().probs()) sx += q;
    for (double q : j.marginal_y().probs()) sy += q;
    EXPECT_NEAR(sx, 1.0, 1e-12);
    EXPECT_NEAR(sy, 1.0, 1e-12);
  }
}

TEST(LawsTest, Zeta) {
  LawOptions o;
  o.zeta_kmax = 3;
  const Pmf p = ParseLaw("zeta:2", o);
  const double z = 1 + 0.25 + 1.0 / 9;
  EXPECT_EQ(p.min(), 1);
  EXPECT_EQ(p.max(), 3);
  EXPECT_NEAR(p.Probability(1), 1 / z, 1e-15);
  EXPECT_NEAR(p.Probability(3), 1 / 9.0 / z, 1e-15);
  EXPECT_THROW(ParseLaw("zeta:1"), std::invalid_argument);
}

TEST(LawsTest, ZetaDefaultTruncation) {
  const Pmf p = ParseLaw("zeta:2.5");
  EXPECT_EQ(p.max(), LawOptions::kDefaultZetaKmax);
  // 1 / zeta(2.5)
  EXPECT_NEAR(p.Probability(1), 1.0 / 1.341487257250917, 1e-9);
}

TEST(LawsTest, PoissonGeometricUniformPoint) {
  const Pmf poi = ParseLaw("poisson:3");
  EXPECT_NEAR(poi.Mean(), 3.0, 1e-10);
  EXPECT_NEAR(poi.Probability(0), std::exp(-3.0), 1e-12);
  const Pmf geo = ParseLaw("geometric:0.25");
  EXPECT_NEAR(geo.Probability(0), 0.25, 1e-11);
  EXPECT_NEAR(geo.Probability(2), 0.25 * 0.75 * 0.75, 1e-11);
  EXPECT_NEAR(geo.Mean(), 3.0, 1e-9);
  const Pmf uni = ParseLaw("uniform:2..5");
  EXPECT_EQ(uni.size(), 4u);
  EXPECT_NEAR(uni.Probability(4), 0.25, 1e-15);
  EXPECT_TRUE(ParseLaw("point:7").IsPointMass());
}

TEST(LawsTest, RejectsMalformedSpecs) {
  for (const char* bad : {"", "zeta", "zeta:", "zeta:x", "poisson:-1", "poisson:0",
                          "geometric:0", "geometric:1.5", "uniform:5..2", "uniform:1",
                          "normal:1", "point:x", "poisson:3junk"}) {
    EXPECT_THROW(ParseLaw(bad), std::invalid_argument) << bad;
  }
}

TEST(LawsTest, ReadPmf) {
  std::istringstream in("# law\n0\t0.25\n\n3 0.75  # tail\n");
  const Pmf p = ReadPmf(in, "mem");
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.Probability(3), 0.75);
}

TEST(LawsTest, ReadPmfReportsLine) {
  std::istringstream in("0 0.5\n1 x\n");
  try {
    ReadPmf(in, "law.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.source(), "law.txt");
  }
}

TEST(LawsTest, ReadJointPmf) {
  std::istringstream in("0 0 0.5\n1 1 0.5\n");
  const JointPmf j = ReadJointPmf(in, "mem");
  EXPECT_EQ(j.size(), 2u);
  std::istringstream bad("0 0\n");
  EXPECT_THROW(ReadJointPmf(bad, "mem"), ParseError);
}

}  // namespace
}  // namespace degcorr
