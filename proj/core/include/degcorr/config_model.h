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
#ifndef DEGCORR_CONFIG_MODEL_H_
#define DEGCORR_CONFIG_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "degcorr/degree_type.h"
#include "degcorr/digraph.h"
#include "degcorr/pmf.h"

// Directed configuration model: balanced bi-degree sequences, uniform stub
// pairing (CM, a multigraph), retry-until-simple (RCM), and erasure of
// self-loops and multi-edges (ECM).

namespace degcorr {

// Per-node out- and in-stub counts with equal totals.
struct BiDegreeSequence {
  std::vector<std::int64_t> out_stubs;
  std::vector<std::int64_t> in_stubs;
  // Stubs added by balancing (always to one side).
  std::int64_t balance_added = 0;
  // The two laws' means differ by more than 5% relative.
  bool means_mismatched = false;

  std::size_t node_count() const { return out_stubs.size(); }
  std::int64_t total_stubs() const;
};

// Stubs removed when turning a CM multigraph into a simple graph. A removed
// self-loop counts against both stub ledgers of its node; a k-fold multi-edge
// (v, w) erases k - 1 out-stubs of v and k - 1 in-stubs of w.
struct ErasureLedger {
  std::vector<std::int64_t> erased_out;
  std::vector<std::int64_t> erased_in;
  std::int64_t self_loops_removed = 0;  // edge occurrences
  std::int64_t multi_edges_merged = 0;  // surplus occurrences merged away

  std::int64_t total_erased() const { return self_loops_removed + multi_edges_merged; }
};

struct GenerationResult {
  DirectedMultigraph graph;
  BiDegreeSequence bidegree;
  ErasureLedger ledger;  // zeros for CM and RCM
  std::size_t attempts = 1;
};

constexpr std::size_t kDefaultMaxAttempts = 1000;

// n i.i.d. draws from each law, then balanced: while the totals differ, a
// node chosen uniformly at random gains one stub on the deficient side.
// Throws std::invalid_argument for n == 0, laws with negative support, or a
// realization without any stubs.
BiDegreeSequence SampleBiDegree(std::size_t n, const Pmf& out_law, const Pmf& in_law,
                                std::uint64_t seed);

// Uniform perfect matching of out-stubs to in-stubs (out-stubs in node order,
// in-stubs shuffled). Degrees of the result equal the stubs exactly. Throws
// std::invalid_argument on unbalanced input.
GenerationResult PairStubs(const BiDegreeSequence& bidegree, std::uint64_t seed);

GenerationResult GenerateCm(std::size_t n, const Pmf& out_law, const Pmf& in_law,
                            std::uint64_t seed);

// Draws one bi-degree sequence and re-pairs it until the graph is simple.
// Throws GenerationError carrying the attempt count when max_attempts pairings
// all fail.
GenerationResult GenerateRcm(std::size_t n, const Pmf& out_law, const Pmf& in_law,
                             std::size_t max_attempts, std::uint64_t seed);

// Removes self-loops, then merges multi-edges, filling the ledger. The input
// graph must have been produced from `bidegree`.
GenerationResult EraseToSimple(GenerationResult cm);

GenerationResult GenerateEcm(std::size_t n, const Pmf& out_law, const Pmf& in_law,
                             std::uint64_t seed);

// Limiting laws of (source degree, target degree) at a uniform edge of a CM
// graph, with xi = out_law and gamma = in_law:
//   out-in  : (size-biased xi, size-biased gamma)
//   in-out  : (gamma, xi)
//   out-out : (size-biased xi, xi)
//   in-in   : (gamma, size-biased gamma)
// Throws std::invalid_argument when a law that gets size-biased has zero mean.
std::pair<Pmf, Pmf> LimitingEndpointLaws(DegreeTypePair pair, const Pmf& out_law,
                                         const Pmf& in_law);

}  // namespace degcorr

#endif  // DEGCORR_CONFIG_MODEL_H_
