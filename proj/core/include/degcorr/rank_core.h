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
#ifndef DEGCORR_RANK_CORE_H_
#define DEGCORR_RANK_CORE_H_

#include <cstdint>

#include "degcorr/pmf.h"

// Exact population-level rank functionals for integer-valued laws with finite
// support. Everything here is computed by finite summation or exact
// piecewise-polynomial integration; these are the oracles the graph
// estimators are checked against.

namespace degcorr {

// F(k) + F(k - 1). Lies in [0, 2].
double MidCdfSum(const Pmf& p, std::int64_t k);

// H(k, l) + H(k - 1, l) + H(k, l - 1) + H(k - 1, l - 1). Lies in [0, 4].
double MidJointCdfSum(const JointPmf& j, std::int64_t k, std::int64_t l);

// E[(F_X(X) + F_X(X-1)) (F_Y(Y) + F_Y(Y-1))].
double ExpectedMidCdfProduct(const JointPmf& j);

// E[MidJointCdfSum(j, X, Y)], by an O(n log n) dominance sweep.
double ExpectedMidJointCdfSum(const JointPmf& j);

// Spearman's rho for integer variables, 3 E[MidCdfSum MidCdfSum] - 3.
// Throws DegenerateDistributionError if either marginal is a point mass.
double SpearmanRho(const JointPmf& j);

// Kendall's tau for integer variables, E[MidJointCdfSum(X, Y)] - 1.
double KendallTau(const JointPmf& j);

// Tie factor E[F(X) F(X - 1)]; zero exactly for point masses.
double TieFactor(const Pmf& p);

// Limit of the average-rank Spearman estimator:
// SpearmanRho / (3 sqrt(TieFactor(X) TieFactor(Y))).
// Throws DegenerateDistributionError if either tie factor is zero.
double AverageRankSpearmanLimit(const JointPmf& j);

// Cdf of X + U with U ~ Uniform[0, 1) independent of X. On [k, k + 1) it is
// (x - k) F(k) + (k + 1 - x) F(k - 1).
class ContinuizedCdf {
 public:
  explicit ContinuizedCdf(Pmf base) : base_(std::move(base)) {}

  double operator()(double x) const;
  const Pmf& base() const { return base_; }

 private:
  Pmf base_;
};

// E[F~(X~)^m], integrating F~^m against the piecewise-constant density
// P(X = k) on each unit interval. Gauss-Legendre with enough nodes to be exact
// for the degree-m polynomial. m >= 1; throws std::invalid_argument otherwise.
double ContinuizedMoment(const Pmf& p, int m);

// (1 / (m + 1)) sum_{i=0}^{m} E[F(X)^i F(X - 1)^(m - i)], by direct summation.
double DiscreteMomentSum(const Pmf& p, int m);

// P(X + U <= x, Y + W <= y), U and W independent uniforms. Evaluated from the
// definition as a sum over atoms.
double ContinuizedJointCdf(const JointPmf& j, double x, double y);

// E[F~_X(X~) F~_Y(Y~)] by per-cell two-dimensional quadrature.
double ContinuizedJointProduct(const JointPmf& j);

// E[H~(X~, Y~)] by per-cell two-dimensional quadrature.
double ContinuizedJointCdfMean(const JointPmf& j);

}  // namespace degcorr

#endif  // DEGCORR_RANK_CORE_H_
