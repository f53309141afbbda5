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
#ifndef DEGCORR_DIGRAPH_H_
#define DEGCORR_DIGRAPH_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "degcorr/degree_type.h"
#include "degcorr/pmf.h"
#include "degcorr/random.h"

namespace degcorr {

using NodeId = std::uint32_t;

struct Edge {
  NodeId source = 0;
  NodeId target = 0;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Directed multigraph stored as a flat list of edge occurrences: a k-fold
// multi-edge appears k times, self-loops are kept. Degrees are tallied once
// at construction. Immutable afterwards.
class DirectedMultigraph {
 public:
  DirectedMultigraph() = default;

  // `node_count` defaults to max id + 1 (0 for no edges). Throws
  // std::invalid_argument when an id is >= an explicit node_count.
  static DirectedMultigraph FromEdges(std::vector<Edge> edges,
                                      std::optional<std::size_t> node_count = {});

  std::size_t node_count() const { return out_degree_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const std::int64_t> degrees(DegreeType type) const {
    return type == DegreeType::kOut ? out_degree_ : in_degree_;
  }
  std::int64_t degree(NodeId v, DegreeType type) const { return degrees(type)[v]; }

  // |E(v, w)|, by a linear scan.
  std::size_t Multiplicity(NodeId v, NodeId w) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::int64_t> out_degree_;
  std::vector<std::int64_t> in_degree_;
};

// Degrees read at both ends of every edge occurrence, in edge order:
// source[e] = D^alpha(tail of e), target[e] = D^beta(head of e).
struct EdgeDegreeView {
  std::vector<std::int64_t> source;
  std::vector<std::int64_t> target;

  std::size_t size() const { return source.size(); }
};

EdgeDegreeView DegreesAtEdges(const DirectedMultigraph& g, DegreeTypePair pair);

// Uniform over edge occurrences, so a k-fold multi-edge has weight k / |E|.
// Throws InsufficientEdgesError on an empty graph.
Edge SampleEdge(const DirectedMultigraph& g, Rng& rng);

// Joint law of (D^alpha(tail), D^beta(head)) at a uniformly sampled edge.
JointPmf EmpiricalEdgeJoint(const DirectedMultigraph& g, DegreeTypePair pair);
JointPmf EmpiricalEdgeJoint(const EdgeDegreeView& view);

// Law of the `type` degree at the `side` end of a uniformly sampled edge.
Pmf EmpiricalEndpointMarginal(const DirectedMultigraph& g, EdgeSide side,
                              DegreeType type);

// Law of the `type` degree of a uniformly chosen node.
Pmf EmpiricalNodeDegrees(const DirectedMultigraph& g, DegreeType type);

// No self-loops and no repeated (v, w).
bool IsSimple(const DirectedMultigraph& g);

}  // namespace degcorr

#endif  // DEGCORR_DIGRAPH_H_
