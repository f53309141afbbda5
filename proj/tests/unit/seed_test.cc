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
#include <numeric>
#include <set>

#include <gtest/gtest.h>

#include "degcorr/experiment.h"
#include "degcorr/random.h"
#include "degcorr/seed.h"

namespace degcorr {
namespace {

static_assert(SplitMix64(0) == 0xe220a8397b1dcdafULL);

TEST(SeedTest, SplitMixPins) {
  EXPECT_EQ(SplitMix64(0), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(SplitMix64(1), 0x910a2dec89025cc1ULL);
  EXPECT_EQ(SplitMix64(0xdeadbeef), 0x4adfb90f68c9eb9bULL);
}

TEST(SeedTest, DeriveSeedPins) {
  EXPECT_EQ(DeriveSeed(0, {}), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(DeriveSeed(42, {1}), 0xf34fe9248c9342e5ULL);
  EXPECT_EQ(DeriveSeed(~0ULL, {2, 0}), 0x8025ba95e22b663fULL);
  EXPECT_EQ(CellSeed(42, 0, 0, SeedPurpose::kGraph), 0x41ebdb34bedb6dcdULL);
  EXPECT_EQ(CellSeed(42, 1, 3, SeedPurpose::kTieBreakReplica), 0xbf28a672add11f80ULL);
}

TEST(SeedTest, ChildSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::size_t s = 0; s < 10; ++s)
    for (std::size_t r = 0; r < 100; ++r)
      for (auto p : {SeedPurpose::kGraph, SeedPurpose::kTieBreakReplica, SeedPurpose::kSample})
        seen.insert(CellSeed(1, s, r, p));
  EXPECT_EQ(seen.size(), 3000u);
}

TEST(RandomTest, EngineIsStandardMt64) {
  Rng rng;
  for (int i = 1; i < 10000; ++i) rng();
  EXPECT_EQ(rng(), 9981545732273789042ULL);
}

TEST(RandomTest, UniformUnitRange) {
  Rng rng(1);
  double sum = 0;
  for (int i = 0; i < 100000; ++i) {
    const double u = UniformUnit(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
}

TEST(RandomTest, UniformBelowIsUniform) {
  Rng rng(2);
  std::vector<int> hits(7);
  const int n = 70000;
  for (int i = 0; i < n; ++i) ++hits[UniformBelow(rng, 7)];
  for (int h : hits) EXPECT_NEAR(h, n / 7, 400);
  EXPECT_EQ(UniformBelow(rng, 1), 0u);
}

TEST(RandomTest, ShuffleIsPermutation) {
  Rng rng(3);
  std::vector<int> v(100);
  std::iota(v.begin(), v.end(), 0);
  auto w = v;
  Shuffle(w.begin(), w.end(), rng);
  EXPECT_NE(v, w);
  std::sort(w.begin(), w.end());
  EXPECT_EQ(v, w);
}

}  // namespace
}  // namespace degcorr
