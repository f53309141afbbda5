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
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "degcorr/digraph.h"
#include "degcorr/edge_list_io.h"
#include "degcorr/errors.h"
#include "test_util.h"

namespace degcorr {
namespace {

TEST(EdgeListIoTest, ReadsCommentsBlanksAndSpaces) {
  std::istringstream in("# a graph\n0\t1\n\n0   2 # trailing\n1 2\r\n");
  const auto g = ReadEdgeList(in, "mem");
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
}

TEST(EdgeListIoTest, ExplicitNodeCountKeepsIsolatedNodes) {
  std::istringstream in("0 1\n");
  EXPECT_EQ(ReadEdgeList(in, "mem", 10).node_count(), 10u);
}

TEST(EdgeListIoTest, ErrorsCarryLineNumbers) {
  for (const auto& [text, line] : std::vector<std::pair<std::string, std::size_t>>{
           {"0 1\n1 x\n", 2}, {"0 1\n\n-3 1\n", 3}, {"0 1 2\n", 1}, {"0\n", 1}}) {
    std::istringstream in(text);
    try {
      ReadEdgeList(in, "g.tsv");
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
      EXPECT_NE(std::string(e.what()).find("g.tsv:" + std::to_string(line)), std::string::npos);
    }
  }
}

TEST(EdgeListIoTest, IdBeyondDeclaredCountFails) {
  std::istringstream in("0 5\n");
  EXPECT_THROW(ReadEdgeList(in, "mem", 3), ParseError);
}

TEST(EdgeListIoTest, RoundTripPreservesEdgesAndNodeCount) {
  std::mt19937_64 gen(4);
  for (int t = 0; t < 20; ++t) {
    const auto g = testing::RandomMultigraph(gen, 5 + t, 4 * t);
    std::ostringstream out;
    WriteEdgeList(out, g);
    std::istringstream in(out.str());
    const auto h = ReadEdgeList(in, "mem");
    EXPECT_EQ(h.node_count(), g.node_count());
    EXPECT_TRUE(std::equal(g.edges().begin(), g.edges().end(), h.edges().begin(),
                           h.edges().end()));
  }
}

TEST(EdgeListIoTest, MissingFile) {
  EXPECT_THROW(ReadEdgeListFile("/nonexistent/graph.tsv"), std::runtime_error);
}

TEST(EdgeListIoTest, ReadsFile) {
  const auto path = std::filesystem::temp_directory_path() / "degcorr_io_test.tsv";
  {
    std::ofstream out(path);
    out << "0\t1\n1\t0\n";
  }
  EXPECT_EQ(ReadEdgeListFile(path.string()).edge_count(), 2u);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace degcorr
