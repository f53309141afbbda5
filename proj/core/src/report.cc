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
#include "degcorr/report.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "degcorr/correlations.h"
#include "degcorr/errors.h"
#include "format.h"
#include "json.hpp"

namespace degcorr {
namespace {

using nlohmann::json;

using internal::FormatDouble;

}  // namespace

std::string_view Name(Measure m) {
  switch (m) {
    case Measure::kSpearmanUniform:
      return "spearman_uniform";
    case Measure::kSpearmanAverage:
      return "spearman_average";
    case Measure::kKendall:
      return "kendall";
    case Measure::kPearson:
      return "pearson";
  }
  return "unknown";
}

std::optional<Measure> ParseMeasure(std::string_view name) {
  for (Measure m : AllMeasures()) {
    if (Name(m) == name) return m;
  }
  return std::nullopt;
}

std::optional<double> PairCorrelations::value(Measure m) const {
  switch (m) {
    case Measure::kSpearmanUniform:
      return spearman_uniform;
    case Measure::kSpearmanAverage:
      return spearman_average;
    case Measure::kKendall:
      return kendall;
    case Measure::kPearson:
      return pearson;
  }
  return std::nullopt;
}

void PairCorrelations::set(Measure m, std::optional<double> v) {
  switch (m) {
    case Measure::kSpearmanUniform:
      spearman_uniform = v;
      break;
    case Measure::kSpearmanAverage:
      spearman_average = v;
      break;
    case Measure::kKendall:
      kendall = v;
      break;
    case Measure::kPearson:
      pearson = v;
      break;
  }
}

const PairCorrelations* CorrelationReport::Find(DegreeTypePair pair) const {
  auto it = std::find_if(pairs.begin(), pairs.end(),
                         [&](const PairCorrelations& p) { return p.pair == pair; });
  return it == pairs.end() ? nullptr : &*it;
}

CorrelationReport FullReport(const DirectedMultigraph& g, const ReportOptions& options) {
  if (g.edge_count() < 2) throw InsufficientEdgesError(2, g.edge_count());
  CorrelationReport report;
  report.nodes = g.node_count();
  report.edges = g.edge_count();
  report.seed = options.seed;
  report.tie_break_replicas = std::max<std::size_t>(options.tie_break_replicas, 1);
  for (Measure m : AllMeasures()) {
    if (std::find(options.measures.begin(), options.measures.end(), m) !=
        options.measures.end()) {
      report.measures.push_back(m);
    }
  }

  for (DegreeTypePair pair : DegreeTypePair::All()) {
    if (std::find(options.pairs.begin(), options.pairs.end(), pair) == options.pairs.end()) {
      continue;
    }
    const EdgeDegreeView view = DegreesAtEdges(g, pair);
    PairCorrelations pc;
    pc.pair = pair;
    pc.degenerate_source = IsConstant(view.source);
    pc.degenerate_target = IsConstant(view.target);
    for (Measure m : report.measures) {
      switch (m) {
        case Measure::kSpearmanUniform:
          pc.spearman_uniform =
              MeanUniformRankSpearman(view, options.seed, report.tie_break_replicas);
          break;
        case Measure::kSpearmanAverage:
          pc.spearman_average = AverageRankSpearman(view);
          break;
        case Measure::kKendall:
          pc.kendall = EdgeKendallTau(view);
          break;
        case Measure::kPearson:
          pc.pearson = EdgePearson(view);
          break;
      }
    }
    report.pairs.push_back(pc);
  }
  return report;
}

std::string ReportToJson(const CorrelationReport& report, int indent) {
  json pairs = json::object();
  for (const PairCorrelations& pc : report.pairs) {
    json entry = json::object();
    for (Measure m : report.measures) {
      const auto v = pc.value(m);
      entry[std::string(Name(m))] = v ? json(*v) : json(nullptr);
    }
    entry["degenerate_source"] = pc.degenerate_source;
    entry["degenerate_target"] = pc.degenerate_target;
    pairs[pc.pair.Name()] = std::move(entry);
  }
  json doc = {{"n", report.nodes},
              {"edges", report.edges},
              {"seed", report.seed},
              {"tie_break_replicas", report.tie_break_replicas},
              {"pairs", std::move(pairs)}};
  return doc.dump(indent) + "\n";
}

CorrelationReport ReportFromJson(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("report JSON: ") + e.what());
  }
  try {
    CorrelationReport report;
    report.nodes = doc.at("n").get<std::size_t>();
    report.edges = doc.at("edges").get<std::size_t>();
    report.seed = doc.at("seed").get<std::uint64_t>();
    report.tie_break_replicas = doc.value("tie_break_replicas", std::size_t{1});
    const json& pairs = doc.at("pairs");
    // Measures are the keys present in the first pair; canonical order.
    bool measures_known = false;
    for (DegreeTypePair pair : DegreeTypePair::All()) {
      auto it = pairs.find(pair.Name());
      if (it == pairs.end()) continue;
      PairCorrelations pc;
      pc.pair = pair;
      pc.degenerate_source = it->at("degenerate_source").get<bool>();
      pc.degenerate_target = it->at("degenerate_target").get<bool>();
      for (Measure m : AllMeasures()) {
        auto field = it->find(std::string(Name(m)));
        if (field == it->end()) continue;
        if (!measures_known) report.measures.push_back(m);
        if (!field->is_null()) pc.set(m, field->get<double>());
      }
      measures_known = true;
      report.pairs.push_back(pc);
    }
    for (auto it = pairs.begin(); it != pairs.end(); ++it) {
      if (!DegreeTypePair::Parse(it.key())) {
        throw std::invalid_argument("unknown degree type pair '" + it.key() + "'");
      }
    }
    return report;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("report JSON: ") + e.what());
  }
}

std::string ReportToCsv(const CorrelationReport& report) {
  std::ostringstream out;
  out << "pair,measure,value,defined,degenerate_source,degenerate_target\n";
  for (const PairCorrelations& pc : report.pairs) {
    for (Measure m : report.measures) {
      const auto v = pc.value(m);
      out << pc.pair.Name() << ',' << Name(m) << ',' << (v ? FormatDouble(*v) : "") << ','
          << (v ? "true" : "false") << ',' << (pc.degenerate_source ? "true" : "false")
          << ',' << (pc.degenerate_target ? "true" : "false") << '\n';
    }
  }
  return out.str();
}

}  // namespace degcorr
