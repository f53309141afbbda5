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
#ifndef DEGCORR_REPORT_H_
#define DEGCORR_REPORT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degcorr/degree_type.h"
#include "degcorr/digraph.h"

namespace degcorr {

enum class Measure : std::uint8_t { kSpearmanUniform, kSpearmanAverage, kKendall, kPearson };

// "spearman_uniform", "spearman_average", "kendall", "pearson".
std::string_view Name(Measure m);
std::optional<Measure> ParseMeasure(std::string_view name);

constexpr std::array<Measure, 4> AllMeasures() {
  return {Measure::kSpearmanUniform, Measure::kSpearmanAverage, Measure::kKendall,
          Measure::kPearson};
}

// Rank-based measures only.
constexpr std::array<Measure, 3> RankMeasures() {
  return {Measure::kSpearmanUniform, Measure::kSpearmanAverage, Measure::kKendall};
}

struct PairCorrelations {
  DegreeTypePair pair;
  // nullopt: undefined (degenerate side) or not requested; CorrelationReport
  // ::measures says which.
  std::optional<double> spearman_uniform;
  std::optional<double> spearman_average;
  std::optional<double> kendall;
  std::optional<double> pearson;
  bool degenerate_source = false;
  bool degenerate_target = false;

  std::optional<double> value(Measure m) const;
  void set(Measure m, std::optional<double> v);

  friend bool operator==(const PairCorrelations&, const PairCorrelations&) = default;
};

struct CorrelationReport {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::uint64_t seed = 0;
  std::size_t tie_break_replicas = 1;
  std::vector<Measure> measures;
  std::vector<PairCorrelations> pairs;

  const PairCorrelations* Find(DegreeTypePair pair) const;

  friend bool operator==(const CorrelationReport&, const CorrelationReport&) = default;
};

inline std::vector<Measure> AllMeasureList() {
  constexpr auto all = AllMeasures();
  return {all.begin(), all.end()};
}

inline std::vector<DegreeTypePair> AllPairList() {
  constexpr auto all = DegreeTypePair::All();
  return {all.begin(), all.end()};
}

struct ReportOptions {
  std::vector<DegreeTypePair> pairs = AllPairList();
  std::vector<Measure> measures = AllMeasureList();
  std::uint64_t seed = 0;
  std::size_t tie_break_replicas = 1;
};

// All requested measures on all requested pairs, in canonical order. Needs |E| >= 2. Degenerate
// sides yield nullopt for average-rank Spearman and Pearson, with flags set;
// they never throw. Identical (graph, options) give identical reports.
CorrelationReport FullReport(const DirectedMultigraph& g, const ReportOptions& options = {});

// {"n", "edges", "seed", "tie_break_replicas", "pairs": {"out-in": {...}}};
// undefined values are null, unrequested measures are absent. Doubles are
// written in shortest round-trip form.
std::string ReportToJson(const CorrelationReport& report, int indent = 2);
// Throws std::invalid_argument on schema violations.
CorrelationReport ReportFromJson(std::string_view json);

// "pair,measure,value,defined,degenerate_source,degenerate_target" rows.
std::string ReportToCsv(const CorrelationReport& report);

}  // namespace degcorr

#endif  // DEGCORR_REPORT_H_
