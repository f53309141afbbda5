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
#include "degcorr/experiment.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>
#include <thread>
#include <tuple>
#include <utility>

#include "degcorr/correlations.h"
#include "degcorr/digraph.h"
#include "degcorr/errors.h"
#include "degcorr/random.h"
#include "degcorr/rank_core.h"
#include "format.h"

namespace degcorr {
namespace {

using Clock = std::chrono::steady_clock;

double MillisecondsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Runs task(i) for i in [0, count) on a pool and returns the per-task row
// blocks concatenated in index order.
template <typename Task>
std::vector<ExperimentRow> RunCells(std::size_t count, std::size_t threads, Task task) {
  std::vector<std::vector<ExperimentRow>> blocks(count);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        blocks[i] = task(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ExperimentRow> rows;
  for (auto& block : blocks) {
    std::move(block.begin(), block.end(), std::back_inserter(rows));
  }
  return rows;
}

std::optional<double> Evaluate(Measure m, const EdgeDegreeView& view, std::uint64_t tie_seed,
                               std::size_t tie_replicas) {
  switch (m) {
    case Measure::kSpearmanUniform:
      return MeanUniformRankSpearman(view, tie_seed, tie_replicas);
    case Measure::kSpearmanAverage:
      return AverageRankSpearman(view);
    case Measure::kKendall:
      return EdgeKendallTau(view);
    case Measure::kPearson:
      return EdgePearson(view);
  }
  return std::nullopt;
}

std::vector<Measure> Canonical(const std::vector<Measure>& wanted) {
  std::vector<Measure> out;
  for (Measure m : AllMeasures()) {
    if (std::find(wanted.begin(), wanted.end(), m) != wanted.end()) out.push_back(m);
  }
  return out;
}

std::vector<DegreeTypePair> Canonical(const std::vector<DegreeTypePair>& wanted) {
  std::vector<DegreeTypePair> out;
  for (DegreeTypePair p : DegreeTypePair::All()) {
    if (std::find(wanted.begin(), wanted.end(), p) != wanted.end()) out.push_back(p);
  }
  return out;
}

using internal::FormatDouble;

std::string FormatOptional(const std::optional<double>& v) {
  return v ? FormatDouble(*v) : std::string();
}

std::string Quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

constexpr const char* kRowsHeader =
    "n,replica,pair,measure,value,defined,reference,error,edges,attempts,erased_stubs,"
    "runtime_ms,note";

// Splits one CSV record, reading further lines when a quoted field spans them.
std::vector<std::string> ReadRecord(std::istream& in, std::string first, std::size_t& line_no,
                                    const std::string& source) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  std::string line = std::move(first);
  for (;;) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (quoted) {
        if (c == '"') {
          if (i + 1 < line.size() && line[i + 1] == '"') {
            field += '"';
            ++i;
          } else {
            quoted = false;
          }
        } else {
          field += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        fields.push_back(std::move(field));
        field.clear();
      } else {
        field += c;
      }
    }
    if (!quoted) break;
    if (!std::getline(in, line)) throw ParseError(source, line_no, "unterminated quoted field");
    ++line_no;
    field += '\n';
  }
  fields.push_back(std::move(field));
  return fields;
}

template <typename T>
T ParseNumber(const std::string& text, const std::string& source, std::size_t line,
              const char* what) {
  T value{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw ParseError(source, line, std::string("bad ") + what + " '" + text + "'");
  }
  return value;
}

std::optional<double> ParseOptionalDouble(const std::string& text, const std::string& source,
                                          std::size_t line, const char* what) {
  if (text.empty()) return std::nullopt;
  return ParseNumber<double>(text, source, line, what);
}

}  // namespace

std::string_view Name(Model m) {
  switch (m) {
    case Model::kCm:
      return "cm";
    case Model::kRcm:
      return "rcm";
    case Model::kEcm:
      return "ecm";
  }
  return "?";
}

std::optional<Model> ParseModel(std::string_view name) {
  for (Model m : {Model::kCm, Model::kRcm, Model::kEcm}) {
    if (Name(m) == name) return m;
  }
  return std::nullopt;
}

void ExperimentConfig::Validate() const {
  if (sizes.empty()) throw std::invalid_argument("no sizes given");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw std::invalid_argument("sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1]) {
      throw std::invalid_argument("sizes must be strictly ascending");
    }
  }
  if (replicas == 0) throw std::invalid_argument("replicas must be positive");
  if (tie_break_replicas == 0) throw std::invalid_argument("tie_break_replicas must be positive");
  if (measures.empty()) throw std::invalid_argument("no measures given");
  if (pairs.empty()) throw std::invalid_argument("no pairs given");
}

std::optional<double> ExperimentRow::error() const {
  if (!value || !reference) return std::nullopt;
  return *value - *reference;
}

GenerationResult GenerateModel(Model model, std::size_t n, const Pmf& out_law,
                               const Pmf& in_law, std::size_t max_attempts,
                               std::uint64_t seed) {
  switch (model) {
    case Model::kCm:
      return GenerateCm(n, out_law, in_law, seed);
    case Model::kRcm:
      return GenerateRcm(n, out_law, in_law, max_attempts, seed);
    case Model::kEcm:
      return GenerateEcm(n, out_law, in_law, seed);
  }
  throw std::invalid_argument("unknown model");
}

std::vector<ExperimentRow> RunNullModel(const ExperimentConfig& config) {
  config.Validate();
  const Pmf out_law = ParseLaw(config.out_law, config.law_options);
  const Pmf in_law = ParseLaw(config.in_law, config.law_options);
  const auto pairs = Canonical(config.pairs);
  const auto measures = Canonical(config.measures);

  auto cell = [&](std::size_t index) {
    const std::size_t si = index / config.replicas;
    const std::size_t r = index % config.replicas;
    const std::size_t n = config.sizes[si];
    std::vector<ExperimentRow> rows;

    const auto gen_start = Clock::now();
    GenerationResult gen;
    std::string failure;
    try {
      gen = GenerateModel(config.model, n, out_law, in_law, config.max_attempts,
                          CellSeed(config.seed, si, r, SeedPurpose::kGraph));
    } catch (const GenerationError& e) {
      failure = e.what();
      gen.attempts = e.attempts();
    }
    const double gen_ms = MillisecondsSince(gen_start);
    const std::size_t m = gen.graph.edge_count();
    if (failure.empty() && m < 2) failure = "fewer than 2 edges";
    const std::uint64_t tie_seed = CellSeed(config.seed, si, r, SeedPurpose::kTieBreakReplica);

    for (DegreeTypePair pair : pairs) {
      EdgeDegreeView view;
      if (failure.empty()) view = DegreesAtEdges(gen.graph, pair);
      for (Measure measure : measures) {
        ExperimentRow row;
        row.n = n;
        row.replica = r;
        row.pair = pair.Name();
        row.measure = std::string(Name(measure));
        row.edges = m;
        row.attempts = gen.attempts;
        row.erased_stubs = gen.ledger.total_erased();
        if (!failure.empty()) {
          row.note = failure;
          row.runtime_ms = gen_ms;
        } else {
          const auto start = Clock::now();
          row.value = Evaluate(measure, view, tie_seed, config.tie_break_replicas);
          row.runtime_ms = gen_ms + MillisecondsSince(start);
          if (!row.value) row.note = "constant degree sequence";
        }
        rows.push_back(std::move(row));
      }
    }
    return rows;
  };
  return RunCells(config.sizes.size() * config.replicas, config.threads, cell);
}

std::optional<JointPmf> BuiltinJoint(std::string_view name) {
  if (name == "diagonal-bernoulli") return JointPmf::FromAtoms({{0, 0, 0.5}, {1, 1, 0.5}});
  if (name == "antidiagonal-bernoulli") return JointPmf::FromAtoms({{0, 1, 0.5}, {1, 0, 0.5}});
  if (name == "product-bernoulli") {
    const Pmf b = Pmf::FromPairs({{0, 0.5}, {1, 0.5}});
    return JointPmf::Product(b, b);
  }
  return std::nullopt;
}

double PopulationPearson(const JointPmf& joint) {
  double ex = 0, ey = 0;
  for (const auto& a : joint.atoms()) {
    ex += a.p * static_cast<double>(a.x);
    ey += a.p * static_cast<double>(a.y);
  }
  double sxx = 0, syy = 0, sxy = 0;
  for (const auto& a : joint.atoms()) {
    const double dx = static_cast<double>(a.x) - ex;
    const double dy = static_cast<double>(a.y) - ey;
    sxx += a.p * dx * dx;
    syy += a.p * dy * dy;
    sxy += a.p * dx * dy;
  }
  if (sxx <= 0 || syy <= 0) throw DegenerateDistributionError("point-mass marginal");
  return sxy / std::sqrt(sxx * syy);
}

std::vector<ExperimentRow> RunConsistency(const JointPmf& joint,
                                          const ConsistencyConfig& config) {
  ExperimentConfig check;
  check.sizes = config.sizes;
  check.replicas = config.replicas;
  check.tie_break_replicas = config.tie_break_replicas;
  check.Validate();

  const double rho = SpearmanRho(joint);
  const double rho_bar = AverageRankSpearmanLimit(joint);
  const double tau = KendallTau(joint);
  const double pearson = PopulationPearson(joint);
  auto target = [&](Measure m) {
    switch (m) {
      case Measure::kSpearmanUniform:
        return rho;
      case Measure::kSpearmanAverage:
        return rho_bar;
      case Measure::kKendall:
        return tau;
      case Measure::kPearson:
        return pearson;
    }
    return 0.0;
  };

  auto cell = [&](std::size_t index) {
    const std::size_t si = index / config.replicas;
    const std::size_t r = index % config.replicas;
    const std::size_t n = config.sizes[si];
    Rng rng(CellSeed(config.seed, si, r, SeedPurpose::kSample));
    EdgeDegreeView view;
    view.source.reserve(n);
    view.target.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto [x, y] = joint.Sample(rng);
      view.source.push_back(x);
      view.target.push_back(y);
    }
    const std::uint64_t tie_seed = CellSeed(config.seed, si, r, SeedPurpose::kTieBreakReplica);

    std::vector<ExperimentRow> rows;
    for (Measure measure : AllMeasures()) {
      ExperimentRow row;
      row.n = n;
      row.replica = r;
      row.pair = "x-y";
      row.measure = std::string(Name(measure));
      row.reference = target(measure);
      row.edges = n;
      if (n < 2) {
        row.note = "fewer than 2 edges";
      } else {
        const auto start = Clock::now();
        row.value = Evaluate(measure, view, tie_seed, config.tie_break_replicas);
        row.runtime_ms = MillisecondsSince(start);
        if (!row.value) row.note = "constant degree sequence";
      }
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return RunCells(config.sizes.size() * config.replicas, config.threads, cell);
}

std::vector<ExperimentRow> RunTable1(const ExperimentConfig& config) {
  config.Validate();
  const Pmf out_law = ParseLaw(config.out_law, config.law_options);
  const Pmf in_law = ParseLaw(config.in_law, config.law_options);
  const auto pairs = Canonical(config.pairs);
  std::vector<std::pair<Pmf, Pmf>> limits;
  for (DegreeTypePair pair : pairs) limits.push_back(LimitingEndpointLaws(pair, out_law, in_law));

  auto cell = [&](std::size_t index) {
    const std::size_t si = index / config.replicas;
    const std::size_t r = index % config.replicas;
    const std::size_t n = config.sizes[si];
    const auto start = Clock::now();
    std::vector<ExperimentRow> rows;
    GenerationResult gen;
    std::string failure;
    try {
      gen = GenerateModel(config.model, n, out_law, in_law, config.max_attempts,
                          CellSeed(config.seed, si, r, SeedPurpose::kGraph));
    } catch (const GenerationError& e) {
      failure = e.what();
      gen.attempts = e.attempts();
    }
    if (failure.empty() && gen.graph.edge_count() == 0) failure = "no edges";

    auto add = [&](std::string pair, std::string measure, std::function<double()> tv) {
      ExperimentRow row;
      row.n = n;
      row.replica = r;
      row.pair = std::move(pair);
      row.measure = std::move(measure);
      row.reference = 0.0;
      row.edges = gen.graph.edge_count();
      row.attempts = gen.attempts;
      row.erased_stubs = gen.ledger.total_erased();
      if (failure.empty()) {
        row.value = tv();
      } else {
        row.note = failure;
      }
      row.runtime_ms = MillisecondsSince(start);
      rows.push_back(std::move(row));
    };
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const DegreeTypePair pair = pairs[i];
      add(pair.Name(), "tv_source", [&] {
        return TotalVariation(
            EmpiricalEndpointMarginal(gen.graph, EdgeSide::kSource, pair.source),
            limits[i].first);
      });
      add(pair.Name(), "tv_target", [&] {
        return TotalVariation(
            EmpiricalEndpointMarginal(gen.graph, EdgeSide::kTarget, pair.target),
            limits[i].second);
      });
    }
    add("node", "tv_out", [&] {
      return TotalVariation(EmpiricalNodeDegrees(gen.graph, DegreeType::kOut), out_law);
    });
    add("node", "tv_in", [&] {
      return TotalVariation(EmpiricalNodeDegrees(gen.graph, DegreeType::kIn), in_law);
    });
    return rows;
  };
  return RunCells(config.sizes.size() * config.replicas, config.threads, cell);
}

std::vector<SummaryRow> Summarize(std::span<const ExperimentRow> rows) {
  using Key = std::tuple<std::size_t, std::string, std::string>;
  std::map<Key, std::size_t> index;
  std::vector<SummaryRow> out;
  std::vector<std::vector<double>> values;
  for (const auto& row : rows) {
    Key key{row.n, row.pair, row.measure};
    auto [it, inserted] = index.try_emplace(key, out.size());
    if (inserted) {
      SummaryRow s;
      s.n = row.n;
      s.pair = row.pair;
      s.measure = row.measure;
      s.reference = row.reference;
      out.push_back(std::move(s));
      values.emplace_back();
    }
    SummaryRow& s = out[it->second];
    if (row.value) {
      values[it->second].push_back(*row.value);
      ++s.defined;
    } else {
      ++s.undefined;
    }
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& v = values[i];
    if (v.empty()) continue;
    double sum = 0, abs_sum = 0;
    for (double x : v) {
      sum += x;
      abs_sum += std::abs(x);
    }
    const double mean = sum / static_cast<double>(v.size());
    double ss = 0;
    for (double x : v) ss += (x - mean) * (x - mean);
    out[i].mean = mean;
    out[i].mean_abs = abs_sum / static_cast<double>(v.size());
    out[i].stddev = v.size() > 1 ? std::sqrt(ss / static_cast<double>(v.size() - 1)) : 0.0;
  }
  return out;
}

void WriteRowsCsv(std::ostream& out, std::span<const ExperimentRow> rows, bool include_runtime) {
  out << kRowsHeader << '\n';
  for (const auto& row : rows) {
    const auto err = row.error();
    out << row.n << ',' << row.replica << ',' << Quote(row.pair) << ',' << Quote(row.measure)
        << ',' << FormatOptional(row.value) << ',' << (row.defined() ? 1 : 0) << ','
        << FormatOptional(row.reference) << ',' << FormatOptional(err) << ',' << row.edges << ','
        << row.attempts << ',' << row.erased_stubs << ','
        << FormatDouble(include_runtime ? row.runtime_ms : 0.0) << ',' << Quote(row.note)
        << '\n';
  }
}

std::vector<ExperimentRow> ReadRowsCsv(std::istream& in, const std::string& source_name) {
  std::vector<ExperimentRow> rows;
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError(source_name, 1, "missing header");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kRowsHeader) throw ParseError(source_name, line_no, "unexpected header");

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::size_t start_line = line_no;
    auto f = ReadRecord(in, line, line_no, source_name);
    if (f.size() != 13) {
      throw ParseError(source_name, start_line,
                       "expected 13 fields, got " + std::to_string(f.size()));
    }
    ExperimentRow row;
    row.n = ParseNumber<std::size_t>(f[0], source_name, start_line, "n");
    row.replica = ParseNumber<std::size_t>(f[1], source_name, start_line, "replica");
    row.pair = f[2];
    row.measure = f[3];
    row.value = ParseOptionalDouble(f[4], source_name, start_line, "value");
    if (f[5] != (row.value ? "1" : "0")) {
      throw ParseError(source_name, start_line, "defined flag disagrees with value");
    }
    row.reference = ParseOptionalDouble(f[6], source_name, start_line, "reference");
    row.edges = ParseNumber<std::size_t>(f[8], source_name, start_line, "edges");
    row.attempts = ParseNumber<std::size_t>(f[9], source_name, start_line, "attempts");
    row.erased_stubs = ParseNumber<std::int64_t>(f[10], source_name, start_line, "erased_stubs");
    row.runtime_ms = ParseNumber<double>(f[11], source_name, start_line, "runtime_ms");
    row.note = f[12];
    rows.push_back(std::move(row));
  }
  return rows;
}

void WriteSummaryCsv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "n,pair,measure,defined,undefined,mean,stddev,mean_abs,reference,bias\n";
  for (const auto& s : rows) {
    const bool any = s.defined > 0;
    out << s.n << ',' << Quote(s.pair) << ',' << Quote(s.measure) << ',' << s.defined << ','
        << s.undefined << ',' << (any ? FormatDouble(s.mean) : "") << ','
        << (any ? FormatDouble(s.stddev) : "") << ',' << (any ? FormatDouble(s.mean_abs) : "")
        << ',' << FormatOptional(s.reference) << ','
        << (any && s.reference ? FormatDouble(s.mean - *s.reference) : "") << '\n';
  }
}

}  // namespace degcorr
