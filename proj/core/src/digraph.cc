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
#include "degcorr/digraph.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "degcorr/errors.h"

namespace degcorr {
namespace {

void RequireEdges(const DirectedMultigraph& g) {
  if (g.edge_count() == 0) throw InsufficientEdgesError(1, 0);
}

Pmf LawOfValues(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  std::vector<std::pair<std::int64_t, std::uint64_t>> counts;
  for (std::int64_t v : values) {
    if (counts.empty() || counts.back().first != v) {
      counts.emplace_back(v, 0);
    }
    ++counts.back().second;
  }
  return Pmf::FromCounts(counts);
}

}  // namespace

DirectedMultigraph DirectedMultigraph::FromEdges(std::vector<Edge> edges,
                                                 std::optional<std::size_t> node_count) {
  std::size_t n = 0;
  for (const Edge& e : edges) {
    n = std::max<std::size_t>(n, std::size_t{std::max(e.source, e.target)} + 1);
  }
  if (node_count) {
    if (*node_count < n) {
      throw std::invalid_argument("node id " + std::to_string(n - 1) +
                                  " out of range for node count " +
                                  std::to_string(*node_count));
    }
    n = *node_count;
  }
  DirectedMultigraph g;
  g.edges_ = std::move(edges);
  g.out_degree_.assign(n, 0);
  g.in_degree_.assign(n, 0);
  for (const Edge& e : g.edges_) {
    ++g.out_degree_[e.source];
    ++g.in_degree_[e.target];
  }
  return g;
}

std::size_t DirectedMultigraph::Multiplicity(NodeId v, NodeId w) const {
  return static_cast<std::size_t>(
      std::count(edges_.begin(), edges_.end(), Edge{v, w}));
}

EdgeDegreeView DegreesAtEdges(const DirectedMultigraph& g, DegreeTypePair pair) {
  const auto src = g.degrees(pair.source);
  const auto dst = g.degrees(pair.target);
  EdgeDegreeView view;
  view.source.reserve(g.edge_count());
  view.target.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    view.source.push_back(src[e.source]);
    view.target.push_back(dst[e.target]);
  }
  return view;
}

Edge SampleEdge(const DirectedMultigraph& g, Rng& rng) {
  RequireEdges(g);
  return g.edges()[UniformBelow(rng, g.edge_count())];
}

JointPmf EmpiricalEdgeJoint(const EdgeDegreeView& view) {
  if (view.size() == 0) throw InsufficientEdgesError(1, 0);
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  pairs.reserve(view.size());
  for (std::size_t i = 0; i < view.size(); ++i) {
    pairs.emplace_back(view.source[i], view.target[i]);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<JointAtom> atoms;
  const auto m = static_cast<double>(pairs.size());
  std::size_t i = 0;
  while (i < pairs.size()) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    atoms.push_back({pairs[i].first, pairs[i].second, static_cast<double>(j - i) / m});
    i = j;
  }
  return JointPmf::FromWeights(std::move(atoms));
}

JointPmf EmpiricalEdgeJoint(const DirectedMultigraph& g, DegreeTypePair pair) {
  RequireEdges(g);
  return EmpiricalEdgeJoint(DegreesAtEdges(g, pair));
}

Pmf EmpiricalEndpointMarginal(const DirectedMultigraph& g, EdgeSide side,
                              DegreeType type) {
  RequireEdges(g);
  const auto deg = g.degrees(type);
  std::vector<std::int64_t> values;
  values.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    values.push_back(deg[side == EdgeSide::kSource ? e.source : e.target]);
  }
  return LawOfValues(std::move(values));
}

Pmf EmpiricalNodeDegrees(const DirectedMultigraph& g, DegreeType type) {
  if (g.node_count() == 0) throw std::invalid_argument("graph has no nodes");
  const auto deg = g.degrees(type);
  return LawOfValues({deg.begin(), deg.end()});
}

bool IsSimple(const DirectedMultigraph& g) {
  std::vector<std::uint64_t> keys;
  keys.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    if (e.source == e.target) return false;
    keys.push_back((std::uint64_t{e.source} << 32) | e.target);
  }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

}  // namespace degcorr
