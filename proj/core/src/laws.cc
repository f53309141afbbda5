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
#include "degcorr/laws.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degcorr/errors.h"

namespace degcorr {
namespace {

constexpr double kTailMass = 1e-12;
constexpr const char* kLawUsage =
    "expected one of zeta:a, poisson:l, geometric:p, uniform:a..b, point:k";

[[noreturn]] void BadLaw(std::string_view spec, const std::string& why) {
  throw std::invalid_argument("invalid law '" + std::string(spec) + "': " + why +
                              " (" + kLawUsage + ")");
}

template <typename T>
bool ParseNumber(std::string_view text, T& out) {
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

Pmf Zeta(double a, std::int64_t kmax) {
  std::vector<std::pair<std::int64_t, double>> weights;
  weights.reserve(static_cast<std::size_t>(kmax));
  for (std::int64_t k = 1; k <= kmax; ++k) {
    weights.emplace_back(k, std::pow(static_cast<double>(k), -a));
  }
  return Pmf::FromWeights(std::move(weights));
}

Pmf Poisson(double lambda) {
  std::vector<std::pair<std::int64_t, double>> weights;
  const double log_lambda = std::log(lambda);
  for (std::int64_t k = 0;; ++k) {
    const double kd = static_cast<double>(k);
    const double p = std::exp(-lambda + kd * log_lambda - std::lgamma(kd + 1.0));
    if (p >= kTailMass) {
      weights.emplace_back(k, p);
    } else if (kd > lambda) {
      break;
    }
  }
  return Pmf::FromWeights(std::move(weights));
}

Pmf Geometric(double p) {
  std::vector<std::pair<std::int64_t, double>> weights;
  double mass = p;
  for (std::int64_t k = 0; mass >= kTailMass; ++k) {
    weights.emplace_back(k, mass);
    if (p == 1.0) break;
    mass *= 1.0 - p;
  }
  return Pmf::FromWeights(std::move(weights));
}

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == '\t' || line[i] == ' ' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != '\t' && line[i] != ' ' && line[i] != '\r') ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::string_view StripComment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

}  // namespace

LawOptions LawOptions::FromEnvironment() {
  LawOptions options;
  if (const char* value = std::getenv(kZetaKmaxEnv); value != nullptr && *value) {
    std::int64_t kmax = 0;
    if (!ParseNumber(std::string_view(value), kmax) || kmax < 1) {
      throw std::invalid_argument(std::string(kZetaKmaxEnv) +
                                  " must be a positive integer, got '" + value + "'");
    }
    options.zeta_kmax = kmax;
  }
  return options;
}

Pmf ParseLaw(std::string_view spec, const LawOptions& options) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) BadLaw(spec, "missing ':'");
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = spec.substr(colon + 1);

  if (name == "uniform") {
    const auto dots = arg.find("..");
    std::int64_t a = 0;
    std::int64_t b = 0;
    if (dots == std::string_view::npos || !ParseNumber(arg.substr(0, dots), a) ||
        !ParseNumber(arg.substr(dots + 2), b)) {
      BadLaw(spec, "uniform needs integer bounds a..b");
    }
    if (a > b) BadLaw(spec, "uniform needs a <= b");
    if (b - a > 10'000'000) BadLaw(spec, "uniform support too large");
    std::vector<std::pair<std::int64_t, double>> weights;
    for (std::int64_t k = a; k <= b; ++k) weights.emplace_back(k, 1.0);
    return Pmf::FromWeights(std::move(weights));
  }
  if (name == "point") {
    std::int64_t k = 0;
    if (!ParseNumber(arg, k)) BadLaw(spec, "point needs an integer");
    return Pmf::PointMass(k);
  }

  double value = 0.0;
  if (!ParseNumber(arg, value) || !std::isfinite(value)) {
    BadLaw(spec, "parameter is not a number");
  }
  if (name == "zeta") {
    if (!(value > 1.0)) BadLaw(spec, "zeta exponent must exceed 1");
    if (options.zeta_kmax < 1) BadLaw(spec, "zeta truncation must be positive");
    return Zeta(value, options.zeta_kmax);
  }
  if (name == "poisson") {
    if (!(value > 0.0)) BadLaw(spec, "poisson rate must be positive");
    return Poisson(value);
  }
  if (name == "geometric") {
    if (!(value > 0.0 && value <= 1.0)) BadLaw(spec, "geometric p must lie in (0, 1]");
    return Geometric(value);
  }
  BadLaw(spec, "unknown law '" + std::string(name) + "'");
}

Pmf ReadPmf(std::istream& in, const std::string& source_name) {
  std::vector<std::pair<std::int64_t, double>> atoms;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = SplitFields(StripComment(line));
    if (fields.empty()) continue;
    std::int64_t k = 0;
    double p = 0.0;
    if (fields.size() != 2 || !ParseNumber(fields[0], k) || !ParseNumber(fields[1], p)) {
      throw ParseError(source_name, line_no, "expected 'value<TAB>probability'");
    }
    atoms.emplace_back(k, p);
  }
  try {
    return Pmf::FromPairs(std::move(atoms));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source_name, 0, e.what());
  }
}

JointPmf ReadJointPmf(std::istream& in, const std::string& source_name) {
  std::vector<JointAtom> atoms;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto fields = SplitFields(StripComment(line));
    if (fields.empty()) continue;
    JointAtom a{};
    if (fields.size() != 3 || !ParseNumber(fields[0], a.x) ||
        !ParseNumber(fields[1], a.y) || !ParseNumber(fields[2], a.p)) {
      throw ParseError(source_name, line_no, "expected 'x<TAB>y<TAB>probability'");
    }
    atoms.push_back(a);
  }
  try {
    return JointPmf::FromAtoms(std::move(atoms));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source_name, 0, e.what());
  }
}

}  // namespace degcorr
