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
#ifndef DEGCORR_TESTS_TEST_UTIL_H_
#define DEGCORR_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "degcorr/digraph.h"
#include "degcorr/pmf.h"

namespace degcorr::testing {

// Random pmf on `size` distinct integers drawn from [lo, hi].
inline Pmf RandomPmf(std::mt19937_64& gen, int size, int lo = 0, int hi = 20) {
  std::vector<int> values;
  for (int v = lo; v <= hi; ++v) values.push_back(v);
  std::shuffle(values.begin(), values.end(), gen);
  std::uniform_real_distribution<double> w(0.05, 1.0);
  std::vector<std::pair<std::int64_t, double>> atoms;
  for (int i = 0; i < size; ++i) atoms.emplace_back(values[i], w(gen));
  return Pmf::FromWeights(std::move(atoms));
}

// Random joint pmf with up to sx x sy grid atoms, each present with
// probability 0.6 (at least one).
inline JointPmf RandomJoint(std::mt19937_64& gen, int sx, int sy) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> offset(-3, 3);
  std::vector<std::int64_t> xs, ys;
  std::int64_t x = offset(gen), y = offset(gen);
  for (int i = 0; i < sx; ++i) xs.push_back(x += 1 + (gen() % 3));
  for (int i = 0; i < sy; ++i) ys.push_back(y += 1 + (gen() % 3));
  std::vector<JointAtom> atoms;
  for (auto a : xs) {
    for (auto b : ys) {
      if (u(gen) < 0.6) atoms.push_back({a, b, 0.05 + u(gen)});
    }
  }
  if (atoms.empty()) atoms.push_back({xs[0], ys[0], 1.0});
  return JointPmf::FromWeights(std::move(atoms));
}

// Multigraph with m uniform edges on n nodes; self-loops and repeats allowed.
inline DirectedMultigraph RandomMultigraph(std::mt19937_64& gen, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<NodeId> node(0, static_cast<NodeId>(n - 1));
  std::vector<Edge> edges(m);
  for (auto& e : edges) e = {node(gen), node(gen)};
  return DirectedMultigraph::FromEdges(std::move(edges), n);
}

// Degree-like values with heavy ties.
inline std::vector<std::int64_t> RandomValues(std::mt19937_64& gen, std::size_t m, int range) {
  std::uniform_int_distribution<int> v(0, range);
  std::vector<std::int64_t> out(m);
  for (auto& x : out) x = v(gen);
  return out;
}

}  // namespace degcorr::testing

#endif  // DEGCORR_TESTS_TEST_UTIL_H_
