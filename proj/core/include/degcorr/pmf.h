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
#ifndef DEGCORR_PMF_H_
#define DEGCORR_PMF_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "degcorr/random.h"

namespace degcorr {

// Finite-support probability mass function over the integers.
//
// Support is strictly ascending and every stored mass is positive. Inputs are
// accepted when they sum to one within 1e-9 and are then renormalized, so
// text round-off never trips the invariant.
class Pmf {
 public:
  // Tolerance on the input total before renormalization.
  static constexpr double kSumTolerance = 1e-9;

  Pmf() = default;

  // Throws std::invalid_argument on negative or non-finite masses, duplicate
  // support values, an empty (all-zero) input, or a total outside tolerance.
  // Zero masses are dropped.
  static Pmf FromPairs(std::vector<std::pair<std::int64_t, double>> atoms);

  // Same, but normalizes arbitrary non-negative weights instead of checking
  // the total.
  static Pmf FromWeights(std::vector<std::pair<std::int64_t, double>> weights);

  // Exact empirical law from integer observation counts.
  static Pmf FromCounts(
      std::span<const std::pair<std::int64_t, std::uint64_t>> counts);

  static Pmf PointMass(std::int64_t value);

  std::span<const std::int64_t> support() const { return support_; }
  std::span<const double> probs() const { return probs_; }
  std::size_t size() const { return support_.size(); }
  bool empty() const { return support_.empty(); }

  std::int64_t min() const { return support_.front(); }
  std::int64_t max() const { return support_.back(); }
  bool IsPointMass() const { return support_.size() == 1; }

  // P(X = k).
  double Probability(std::int64_t k) const;
  // P(X <= k): 0 below the support, exactly 1 at or above its maximum.
  double Cdf(std::int64_t k) const;
  double Mean() const;

  // Inverse-cdf draw.
  std::int64_t Sample(Rng& rng) const;

  friend bool operator==(const Pmf&, const Pmf&) = default;

 private:
  void Finalize();

  std::vector<std::int64_t> support_;
  std::vector<double> probs_;
  // cumulative_[i] = P(X <= support_[i]); the last entry is exactly 1.
  std::vector<double> cumulative_;
};

// Half the L1 distance between two laws over the union of their supports.
double TotalVariation(const Pmf& a, const Pmf& b);

// k P(X = k) / E[X]. Throws std::invalid_argument unless the support is
// non-negative with positive mean.
Pmf SizeBiased(const Pmf& p);

struct JointAtom {
  std::int64_t x;
  std::int64_t y;
  double p;

  friend bool operator==(const JointAtom&, const JointAtom&) = default;
};

// Finite-support joint law of an integer pair. Atoms are sorted by (x, y),
// unique, and positive; marginals are materialized at construction.
class JointPmf {
 public:
  JointPmf() = default;

  // Throws std::invalid_argument on the same conditions as Pmf::FromPairs.
  static JointPmf FromAtoms(std::vector<JointAtom> atoms);
  static JointPmf FromWeights(std::vector<JointAtom> weights);
  static JointPmf Product(const Pmf& x, const Pmf& y);

  std::span<const JointAtom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  const Pmf& marginal_x() const { return marginal_x_; }
  const Pmf& marginal_y() const { return marginal_y_; }

  // P(X <= k, Y <= l) by a linear scan.
  double Cdf(std::int64_t k, std::int64_t l) const;

  std::pair<std::int64_t, std::int64_t> Sample(Rng& rng) const;

  friend bool operator==(const JointPmf&, const JointPmf&) = default;

 private:
  void Finalize();

  std::vector<JointAtom> atoms_;
  std::vector<double> cumulative_;
  Pmf marginal_x_;
  Pmf marginal_y_;
};

}  // namespace degcorr

#endif  // DEGCORR_PMF_H_
