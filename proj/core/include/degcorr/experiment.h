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
#ifndef DEGCORR_EXPERIMENT_H_
#define DEGCORR_EXPERIMENT_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degcorr/config_model.h"
#include "degcorr/degree_type.h"
#include "degcorr/laws.h"
#include "degcorr/pmf.h"
#include "degcorr/report.h"
#include "degcorr/seed.h"

namespace degcorr {

enum class Model : std::uint8_t { kCm, kRcm, kEcm };

std::string_view Name(Model m);
std::optional<Model> ParseModel(std::string_view name);

// Sweeps average uniform-rank Spearman over this many tie-break draws.
constexpr std::size_t kDefaultSweepTieBreakReplicas = 32;

struct ExperimentConfig {
  Model model = Model::kEcm;
  std::vector<std::size_t> sizes;
  std::size_t replicas = 1;
  std::string out_law;
  std::string in_law;
  std::vector<Measure> measures = AllMeasureList();
  std::vector<DegreeTypePair> pairs = AllPairList();
  std::uint64_t seed = 0;
  std::size_t tie_break_replicas = kDefaultSweepTieBreakReplicas;
  std::size_t max_attempts = kDefaultMaxAttempts;
  // Worker threads for sweep cells; 0 picks std::thread::hardware_concurrency.
  std::size_t threads = 0;
  LawOptions law_options;

  // Throws std::invalid_argument: sizes empty, not strictly ascending or
  // containing 0; replicas == 0.
  void Validate() const;
};

// One (n, replica, pair, measure) observation. `reference` holds the
// population target where one exists.
struct ExperimentRow {
  std::size_t n = 0;
  std::size_t replica = 0;
  std::string pair;
  std::string measure;
  std::optional<double> value;
  std::optional<double> reference;
  std::size_t edges = 0;
  std::size_t attempts = 0;
  std::int64_t erased_stubs = 0;
  double runtime_ms = 0.0;
  // Why the value is undefined, if it is.
  std::string note;

  bool defined() const { return value.has_value(); }
  std::optional<double> error() const;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

struct SummaryRow {
  std::size_t n = 0;
  std::string pair;
  std::string measure;
  std::size_t defined = 0;
  std::size_t undefined = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for fewer than 2 values
  double mean_abs = 0.0;
  std::optional<double> reference;
};

// Per-cell seed: DeriveSeed(master, {size_index, replica, purpose}).
constexpr std::uint64_t CellSeed(std::uint64_t master, std::size_t size_index,
                                 std::size_t replica, SeedPurpose purpose) {
  return DeriveSeed(master, {size_index, replica, Tag(purpose)});
}

// Builds one graph of the configured model for a cell; rethrows
// GenerationError from RCM.
GenerationResult GenerateModel(Model model, std::size_t n, const Pmf& out_law,
                               const Pmf& in_law, std::size_t max_attempts,
                               std::uint64_t seed);

// Null-model sweep: sizes x replicas x pairs x measures. Generation failures
// become undefined rows with the error in `note`.
std::vector<ExperimentRow> RunNullModel(const ExperimentConfig& config);

struct ConsistencyConfig {
  std::vector<std::size_t> sizes;
  std::size_t replicas = 1;
  std::uint64_t seed = 0;
  std::size_t tie_break_replicas = kDefaultSweepTieBreakReplicas;
  std::size_t threads = 0;
};

// Samples n i.i.d. pairs from `joint` as an edge multiset and compares each
// estimator with its population target (pair column "x-y"). Throws
// DegenerateDistributionError if a marginal is a point mass.
std::vector<ExperimentRow> RunConsistency(const JointPmf& joint,
                                          const ConsistencyConfig& config);

// Built-in joints: "diagonal-bernoulli" (X = Y ~ Bernoulli(1/2)),
// "antidiagonal-bernoulli" (Y = 1 - X), "product-bernoulli" (independent).
std::optional<JointPmf> BuiltinJoint(std::string_view name);

// Population Pearson correlation of a joint law.
double PopulationPearson(const JointPmf& joint);

// Total-variation distance between empirical endpoint-degree laws and their
// CM limits, per pair (measures "tv_source", "tv_target"), plus node-degree
// laws against the input laws (pair "node", measures "tv_out", "tv_in").
std::vector<ExperimentRow> RunTable1(const ExperimentConfig& config);

// Grouped by (n, pair, measure) in first-appearance order.
std::vector<SummaryRow> Summarize(std::span<const ExperimentRow> rows);

// Header: n,replica,pair,measure,value,defined,reference,error,edges,
// attempts,erased_stubs,runtime_ms,note. With include_runtime == false the
// runtime column is written as 0 so output is byte-reproducible.
void WriteRowsCsv(std::ostream& out, std::span<const ExperimentRow> rows,
                  bool include_runtime = true);
// Throws ParseError on malformed input.
std::vector<ExperimentRow> ReadRowsCsv(std::istream& in, const std::string& source_name);

void WriteSummaryCsv(std::ostream& out, std::span<const SummaryRow> rows);

}  // namespace degcorr

#endif  // DEGCORR_EXPERIMENT_H_
