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
#include "degcorr/pmf.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace degcorr {
namespace {

void CheckMass(double p) {
  if (!std::isfinite(p) || p < 0.0) {
    throw std::invalid_argument("probability mass must be finite and >= 0, got " +
                                std::to_string(p));
  }
}

void CheckTotal(double total) {
  if (std::abs(total - 1.0) > Pmf::kSumTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(total) +
                                ", expected 1");
  }
}

}  // namespace

Pmf Pmf::FromWeights(std::vector<std::pair<std::int64_t, double>> weights) {
  std::sort(weights.begin(), weights.end());
  Pmf pmf;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& [k, w] = weights[i];
    CheckMass(w);
    if (i > 0 && weights[i - 1].first == k) {
      throw std::invalid_argument("duplicate support value " + std::to_string(k));
    }
    if (w > 0.0) {
      pmf.support_.push_back(k);
      pmf.probs_.push_back(w);
    }
  }
  if (pmf.support_.empty()) {
    throw std::invalid_argument("distribution has no positive mass");
  }
  pmf.Finalize();
  return pmf;
}

Pmf Pmf::FromPairs(std::vector<std::pair<std::int64_t, double>> atoms) {
  double total = 0.0;
  for (const auto& [k, p] : atoms) {
    CheckMass(p);
    total += p;
  }
  CheckTotal(total);
  return FromWeights(std::move(atoms));
}

Pmf Pmf::FromCounts(
    std::span<const std::pair<std::int64_t, std::uint64_t>> counts) {
  std::vector<std::pair<std::int64_t, double>> weights;
  weights.reserve(counts.size());
  for (const auto& [k, c] : counts) weights.emplace_back(k, static_cast<double>(c));
  return FromWeights(std::move(weights));
}

Pmf Pmf::PointMass(std::int64_t value) { return FromPairs({{value, 1.0}}); }

void Pmf::Finalize() {
  double total = 0.0;
  for (double p : probs_) total += p;
  for (double& p : probs_) p /= total;
  cumulative_.resize(probs_.size());
  double running = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    running += probs_[i];
    cumulative_[i] = running;
  }
  cumulative_.back() = 1.0;
}

double Pmf::Probability(std::int64_t k) const {
  auto it = std::lower_bound(support_.begin(), support_.end(), k);
  if (it == support_.end() || *it != k) return 0.0;
  return probs_[static_cast<std::size_t>(it - support_.begin())];
}

double Pmf::Cdf(std::int64_t k) const {
  auto it = std::upper_bound(support_.begin(), support_.end(), k);
  if (it == support_.begin()) return 0.0;
  return cumulative_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

double Pmf::Mean() const {
  double mean = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    mean += static_cast<double>(support_[i]) * probs_[i];
  }
  return mean;
}

std::int64_t Pmf::Sample(Rng& rng) const {
  const double u = UniformUnit(rng);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return support_[static_cast<std::size_t>(it - cumulative_.begin())];
}

double TotalVariation(const Pmf& a, const Pmf& b) {
  const auto sa = a.support();
  const auto sb = b.support();
  const auto pa = a.probs();
  const auto pb = b.probs();
  std::size_t i = 0;
  std::size_t j = 0;
  double l1 = 0.0;
  while (i < sa.size() || j < sb.size()) {
    if (j == sb.size() || (i < sa.size() && sa[i] < sb[j])) {
      l1 += pa[i++];
    } else if (i == sa.size() || sb[j] < sa[i]) {
      l1 += pb[j++];
    } else {
      l1 += std::abs(pa[i++] - pb[j++]);
    }
  }
  return 0.5 * l1;
}

Pmf SizeBiased(const Pmf& p) {
  if (p.min() < 0) {
    throw std::invalid_argument("size-biasing needs a non-negative support");
  }
  const double mean = p.Mean();
  if (!(mean > 0.0)) {
    throw std::invalid_argument("size-biasing needs a positive mean");
  }
  std::vector<std::pair<std::int64_t, double>> weights;
  weights.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    weights.emplace_back(p.support()[i],
                         static_cast<double>(p.support()[i]) * p.probs()[i] / mean);
  }
  return Pmf::FromWeights(std::move(weights));
}

JointPmf JointPmf::FromWeights(std::vector<JointAtom> weights) {
  std::sort(weights.begin(), weights.end(), [](const JointAtom& a, const JointAtom& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  JointPmf joint;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const JointAtom& a = weights[i];
    CheckMass(a.p);
    if (i > 0 && weights[i - 1].x == a.x && weights[i - 1].y == a.y) {
      throw std::invalid_argument("duplicate joint atom (" + std::to_string(a.x) +
                                  ", " + std::to_string(a.y) + ")");
    }
    if (a.p > 0.0) joint.atoms_.push_back(a);
  }
  if (joint.atoms_.empty()) {
    throw std::invalid_argument("joint distribution has no positive mass");
  }
  joint.Finalize();
  return joint;
}

JointPmf JointPmf::FromAtoms(std::vector<JointAtom> atoms) {
  double total = 0.0;
  for (const JointAtom& a : atoms) {
    CheckMass(a.p);
    total += a.p;
  }
  CheckTotal(total);
  return FromWeights(std::move(atoms));
}

JointPmf JointPmf::Product(const Pmf& x, const Pmf& y) {
  std::vector<JointAtom> atoms;
  atoms.reserve(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      atoms.push_back({x.support()[i], y.support()[j], x.probs()[i] * y.probs()[j]});
    }
  }
  return FromWeights(std::move(atoms));
}

void JointPmf::Finalize() {
  double total = 0.0;
  for (const JointAtom& a : atoms_) total += a.p;
  std::map<std::int64_t, double> mx;
  std::map<std::int64_t, double> my;
  cumulative_.resize(atoms_.size());
  double running = 0.0;
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    JointAtom& a = atoms_[i];
    a.p /= total;
    running += a.p;
    cumulative_[i] = running;
    mx[a.x] += a.p;
    my[a.y] += a.p;
  }
  cumulative_.back() = 1.0;
  marginal_x_ = Pmf::FromWeights({mx.begin(), mx.end()});
  marginal_y_ = Pmf::FromWeights({my.begin(), my.end()});
}

double JointPmf::Cdf(std::int64_t k, std::int64_t l) const {
  double h = 0.0;
  for (const JointAtom& a : atoms_) {
    if (a.x > k) break;
    if (a.y <= l) h += a.p;
  }
  return std::min(h, 1.0);
}

std::pair<std::int64_t, std::int64_t> JointPmf::Sample(Rng& rng) const {
  const double u = UniformUnit(rng);
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  const JointAtom& a = atoms_[static_cast<std::size_t>(it - cumulative_.begin())];
  return {a.x, a.y};
}

}  // namespace degcorr
