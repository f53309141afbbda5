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
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "degcorr/concordance.h"
#include "test_util.h"

namespace degcorr {
namespace {

using Values = std::vector<std::int64_t>;

TEST(ConcordanceTest, SmallExamples) {
  EXPECT_EQ(CountConcordance(Values{1, 2, 3}, Values{1, 2, 3}), (ConcordanceCounts{3, 0}));
  EXPECT_EQ(CountConcordance(Values{1, 2, 3}, Values{3, 2, 1}), (ConcordanceCounts{0, 3}));
  EXPECT_EQ(CountConcordance(Values{2, 2, 1}, Values{1, 2, 2}), (ConcordanceCounts{0, 1}));
  EXPECT_EQ(CountConcordance(Values{4, 4, 4}, Values{1, 2, 3}), (ConcordanceCounts{0, 0}));
  EXPECT_EQ(CountConcordance(Values{7}, Values{1}), (ConcordanceCounts{0, 0}));
  EXPECT_EQ(CountConcordance(Values{}, Values{}), (ConcordanceCounts{0, 0}));
  EXPECT_THROW(CountConcordance(Values{1, 2}, Values{1}), std::invalid_argument);
}

TEST(ConcordanceTest, MatchesNaiveOnRandomTiedLists) {
  std::mt19937_64 gen(1);
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = gen() % 501;
    const int range = 1 + static_cast<int>(gen() % 40);
    const Values x = testing::RandomValues(gen, m, range);
    const Values y = testing::RandomValues(gen, m, 1 + static_cast<int>(gen() % 40));
    EXPECT_EQ(CountConcordance(x, y), CountConcordanceNaive(x, y)) << "trial " << t;
  }
}

TEST(ConcordanceTest, TotalsBoundedByPairCount) {
  std::mt19937_64 gen(2);
  const Values x = testing::RandomValues(gen, 1000, 1000000);
  const Values y = testing::RandomValues(gen, 1000, 1000000);
  const auto c = CountConcordance(x, y);
  EXPECT_LE(c.concordant + c.discordant, 1000u * 999u / 2);
  EXPECT_GT(c.concordant + c.discordant, 1000u * 999u / 2 - 100);
}

}  // namespace
}  // namespace degcorr
