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
#include "degcorr/config_model.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "degcorr/errors.h"
#include "degcorr/random.h"
#include "degcorr/seed.h"

namespace degcorr {
namespace {

std::int64_t Sum(const std::vector<std::int64_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::int64_t{0});
}

// Simple unless a self-loop or a repeated (v, w) exists. Self-loops first.
bool PairingIsSimple(const std::vector<Edge>& edges) {
  for (const Edge& e : edges) {
    if (e.source == e.target) return false;
  }
  std::vector<std::uint64_t> keys;
  keys.reserve(edges.size());
  for (const Edge& e : edges) keys.push_back((std::uint64_t{e.source} << 32) | e.target);
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

std::vector<Edge> Pair(const std::vector<NodeId>& out_slots, std::vector<NodeId> in_slots,
                       Rng& rng) {
  Shuffle(in_slots.begin(), in_slots.end(), rng);
  std::vector<Edge> edges(out_slots.size());
  for (std::size_t i = 0; i < out_slots.size(); ++i) edges[i] = {out_slots[i], in_slots[i]};
  return edges;
}

std::vector<NodeId> Slots(const std::vector<std::int64_t>& stubs) {
  std::vector<NodeId> slots;
  slots.reserve(static_cast<std::size_t>(Sum(stubs)));
  for (std::size_t v = 0; v < stubs.size(); ++v) {
    slots.insert(slots.end(), static_cast<std::size_t>(stubs[v]), static_cast<NodeId>(v));
  }
  return slots;
}

void RequireBalanced(const BiDegreeSequence& b) {
  if (b.out_stubs.size() != b.in_stubs.size()) {
    throw std::invalid_argument("bi-degree sides have different node counts");
  }
  if (Sum(b.out_stubs) != Sum(b.in_stubs)) {
    throw std::invalid_argument("bi-degree sequence is not balanced");
  }
}

}  // namespace

std::int64_t BiDegreeSequence::total_stubs() const { return Sum(out_stubs); }

BiDegreeSequence SampleBiDegree(std::size_t n, const Pmf& out_law, const Pmf& in_law,
                                std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("node count must be positive");
  if (n > std::size_t{1} << 31) throw std::invalid_argument("node count too large");
  if (out_law.min() < 0 || in_law.min() < 0) {
    throw std::invalid_argument("degree laws must have non-negative support");
  }
  Rng rng(seed);
  BiDegreeSequence b;
  b.out_stubs.resize(n);
  b.in_stubs.resize(n);
  for (auto& d : b.out_stubs) d = out_law.Sample(rng);
  for (auto& d : b.in_stubs) d = in_law.Sample(rng);

  const double mo = out_law.Mean();
  const double mi = in_law.Mean();
  b.means_mismatched = std::abs(mo - mi) > 0.05 * std::max(mo, mi);

  std::int64_t delta = Sum(b.in_stubs) - Sum(b.out_stubs);
  b.balance_added = std::abs(delta);
  while (delta != 0) {
    const std::size_t v = UniformBelow(rng, n);
    if (delta > 0) {
      ++b.out_stubs[v];
      --delta;
    } else {
      ++b.in_stubs[v];
      ++delta;
    }
  }
  if (b.total_stubs() == 0) {
    throw std::invalid_argument("sampled bi-degree sequence has no stubs");
  }
  return b;
}

GenerationResult PairStubs(const BiDegreeSequence& bidegree, std::uint64_t seed) {
  RequireBalanced(bidegree);
  Rng rng(seed);
  GenerationResult result;
  result.graph = DirectedMultigraph::FromEdges(
      Pair(Slots(bidegree.out_stubs), Slots(bidegree.in_stubs), rng),
      bidegree.node_count());
  result.bidegree = bidegree;
  result.ledger.erased_out.assign(bidegree.node_count(), 0);
  result.ledger.erased_in.assign(bidegree.node_count(), 0);
  return result;
}

GenerationResult GenerateCm(std::size_t n, const Pmf& out_law, const Pmf& in_law,
                            std::uint64_t seed) {
  const BiDegreeSequence b =
      SampleBiDegree(n, out_law, in_law, DeriveSeed(seed, {Tag(SeedPurpose::kBiDegree)}));
  return PairStubs(b, DeriveSeed(seed, {Tag(SeedPurpose::kPairing), 0}));
}

GenerationResult GenerateRcm(std::size_t n, const Pmf& out_law, const Pmf& in_law,
                             std::size_t max_attempts, std::uint64_t seed) {
  if (max_attempts == 0) throw std::invalid_argument("max_attempts must be >= 1");
  const BiDegreeSequence b =
      SampleBiDegree(n, out_law, in_law, DeriveSeed(seed, {Tag(SeedPurpose::kBiDegree)}));
  const std::vector<NodeId> out_slots = Slots(b.out_stubs);
  const std::vector<NodeId> in_slots = Slots(b.in_stubs);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    Rng rng(DeriveSeed(seed, {Tag(SeedPurpose::kPairing), attempt}));
    std::vector<Edge> edges = Pair(out_slots, in_slots, rng);
    if (!PairingIsSimple(edges)) continue;
    GenerationResult result;
    result.graph = DirectedMultigraph::FromEdges(std::move(edges), n);
    result.bidegree = b;
    result.ledger.erased_out.assign(n, 0);
    result.ledger.erased_in.assign(n, 0);
    result.attempts = attempt + 1;
    return result;
  }
  throw GenerationError("repeated configuration model: no simple graph in " +
                            std::to_string(max_attempts) + " attempt(s) (n=" +
                            std::to_string(n) + ", stubs=" +
                            std::to_string(b.total_stubs()) + ")",
                        max_attempts);
}

GenerationResult EraseToSimple(GenerationResult cm) {
  const std::size_t n = cm.graph.node_count();
  ErasureLedger ledger;
  ledger.erased_out.assign(n, 0);
  ledger.erased_in.assign(n, 0);

  std::vector<Edge> kept;
  kept.reserve(cm.graph.edge_count());
  for (const Edge& e : cm.graph.edges()) {
    if (e.source == e.target) {
      ++ledger.self_loops_removed;
      ++ledger.erased_out[e.source];
      ++ledger.erased_in[e.target];
    } else {
      kept.push_back(e);
    }
  }
  std::sort(kept.begin(), kept.end());
  std::vector<Edge> simple;
  simple.reserve(kept.size());
  for (const Edge& e : kept) {
    if (!simple.empty() && simple.back() == e) {
      ++ledger.multi_edges_merged;
      ++ledger.erased_out[e.source];
      ++ledger.erased_in[e.target];
    } else {
      simple.push_back(e);
    }
  }
  cm.graph = DirectedMultigraph::FromEdges(std::move(simple), n);
  cm.ledger = std::move(ledger);
  return cm;
}

GenerationResult GenerateEcm(std::size_t n, const Pmf& out_law, const Pmf& in_law,
                             std::uint64_t seed) {
  return EraseToSimple(GenerateCm(n, out_law, in_law, seed));
}

std::pair<Pmf, Pmf> LimitingEndpointLaws(DegreeTypePair pair, const Pmf& out_law,
                                         const Pmf& in_law) {
  const bool source_out = pair.source == DegreeType::kOut;
  const bool target_in = pair.target == DegreeType::kIn;
  // Size-biased: source out-degree and target in-degree.
  Pmf source = source_out ? SizeBiased(out_law) : in_law;
  Pmf target = target_in ? SizeBiased(in_law) : out_law;
  return {std::move(source), std::move(target)};
}

}  // namespace degcorr
