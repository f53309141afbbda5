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
#include "degcorr/rank_core.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

#include "degcorr/errors.h"
#include "dominance.h"

namespace degcorr {
namespace {

struct Quadrature {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1
};

// n-point Gauss-Legendre rule mapped to [0, 1]; exact for degree 2n - 1.
Quadrature GaussLegendre(int n) {
  Quadrature q;
  q.nodes.resize(static_cast<std::size_t>(n));
  q.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-16) break;
    }
    const auto k = static_cast<std::size_t>(i);
    q.nodes[k] = 0.5 * (1.0 - z);
    q.weights[k] = 1.0 / ((1.0 - z * z) * dp * dp);
  }
  return q;
}

double Clamp01(double t) { return std::clamp(t, 0.0, 1.0); }

void RequireSpread(const Pmf& p, const char* side) {
  if (p.IsPointMass()) {
    throw DegenerateDistributionError(std::string(side) +
                                      " marginal is concentrated in a single point");
  }
}

}  // namespace

double MidCdfSum(const Pmf& p, std::int64_t k) { return p.Cdf(k) + p.Cdf(k - 1); }

double MidJointCdfSum(const JointPmf& j, std::int64_t k, std::int64_t l) {
  return j.Cdf(k, l) + j.Cdf(k - 1, l) + j.Cdf(k, l - 1) + j.Cdf(k - 1, l - 1);
}

double ExpectedMidCdfProduct(const JointPmf& j) {
  double sum = 0.0;
  for (const JointAtom& a : j.atoms()) {
    sum += a.p * MidCdfSum(j.marginal_x(), a.x) * MidCdfSum(j.marginal_y(), a.y);
  }
  return sum;
}

double ExpectedMidJointCdfSum(const JointPmf& j) {
  const auto atoms = j.atoms();
  std::vector<std::int64_t> xs;
  std::vector<std::int64_t> ys;
  std::vector<double> ws;
  xs.reserve(atoms.size());
  ys.reserve(atoms.size());
  ws.reserve(atoms.size());
  for (const JointAtom& a : atoms) {
    xs.push_back(a.x);
    ys.push_back(a.y);
    ws.push_back(a.p);
  }
  const auto dom = internal::DominanceSums<double>(xs, ys, ws);
  double sum = 0.0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    sum += ws[i] * (dom[i].le_le + dom[i].lt_le + dom[i].le_lt + dom[i].lt_lt);
  }
  return sum;
}

double SpearmanRho(const JointPmf& j) {
  RequireSpread(j.marginal_x(), "first");
  RequireSpread(j.marginal_y(), "second");
  return 3.0 * ExpectedMidCdfProduct(j) - 3.0;
}

double KendallTau(const JointPmf& j) { return ExpectedMidJointCdfSum(j) - 1.0; }

double TieFactor(const Pmf& p) {
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::int64_t k = p.support()[i];
    sum += p.probs()[i] * p.Cdf(k) * p.Cdf(k - 1);
  }
  return sum;
}

double AverageRankSpearmanLimit(const JointPmf& j) {
  const double sx = TieFactor(j.marginal_x());
  const double sy = TieFactor(j.marginal_y());
  if (sx <= 0.0 || sy <= 0.0) {
    throw DegenerateDistributionError("tie factor is zero: a marginal is a point mass");
  }
  return SpearmanRho(j) / (3.0 * std::sqrt(sx * sy));
}

double ContinuizedCdf::operator()(double x) const {
  const double fk = std::floor(x);
  const auto k = static_cast<std::int64_t>(fk);
  const double s = x - fk;
  return s * base_.Cdf(k) + (1.0 - s) * base_.Cdf(k - 1);
}

double ContinuizedMoment(const Pmf& p, int m) {
  if (m < 1) throw std::invalid_argument("moment order must be >= 1");
  const Quadrature q = GaussLegendre(m / 2 + 1);
  const ContinuizedCdf cdf(p);
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto k = static_cast<double>(p.support()[i]);
    double cell = 0.0;
    for (std::size_t n = 0; n < q.nodes.size(); ++n) {
      cell += q.weights[n] * std::pow(cdf(k + q.nodes[n]), m);
    }
    sum += p.probs()[i] * cell;
  }
  return sum;
}

double DiscreteMomentSum(const Pmf& p, int m) {
  if (m < 1) throw std::invalid_argument("moment order must be >= 1");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const std::int64_t k = p.support()[i];
    const double f = p.Cdf(k);
    const double g = p.Cdf(k - 1);
    double terms = 0.0;
    for (int e = 0; e <= m; ++e) terms += std::pow(f, e) * std::pow(g, m - e);
    sum += p.probs()[i] * terms;
  }
  return sum / (m + 1);
}

double ContinuizedJointCdf(const JointPmf& j, double x, double y) {
  double h = 0.0;
  for (const JointAtom& a : j.atoms()) {
    h += a.p * Clamp01(x - static_cast<double>(a.x)) *
         Clamp01(y - static_cast<double>(a.y));
  }
  return h;
}

double ContinuizedJointProduct(const JointPmf& j) {
  const Quadrature q = GaussLegendre(2);
  const ContinuizedCdf fx(j.marginal_x());
  const ContinuizedCdf fy(j.marginal_y());
  double sum = 0.0;
  for (const JointAtom& a : j.atoms()) {
    double cell = 0.0;
    for (std::size_t s = 0; s < q.nodes.size(); ++s) {
      for (std::size_t t = 0; t < q.nodes.size(); ++t) {
        cell += q.weights[s] * q.weights[t] *
                fx(static_cast<double>(a.x) + q.nodes[s]) *
                fy(static_cast<double>(a.y) + q.nodes[t]);
      }
    }
    sum += a.p * cell;
  }
  return sum;
}

double ContinuizedJointCdfMean(const JointPmf& j) {
  const Quadrature q = GaussLegendre(2);
  double sum = 0.0;
  for (const JointAtom& a : j.atoms()) {
    double cell = 0.0;
    for (std::size_t s = 0; s < q.nodes.size(); ++s) {
      for (std::size_t t = 0; t < q.nodes.size(); ++t) {
        cell += q.weights[s] * q.weights[t] *
                ContinuizedJointCdf(j, static_cast<double>(a.x) + q.nodes[s],
                                    static_cast<double>(a.y) + q.nodes[t]);
      }
    }
    sum += a.p * cell;
  }
  return sum;
}

}  // namespace degcorr
