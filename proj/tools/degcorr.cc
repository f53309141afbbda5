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
// degcorr command-line tool: generate, measure, experiment.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degcorr/config_model.h"
#include "degcorr/digraph.h"
#include "degcorr/edge_list_io.h"
#include "degcorr/errors.h"
#include "degcorr/experiment.h"
#include "degcorr/laws.h"
#include "degcorr/report.h"

namespace {

using namespace degcorr;

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kGeneration = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Accepts plain integers and integral scientific notation such as 1e4.
std::size_t ParseSize(const std::string& text) {
  std::uint64_t v = 0;
  const char* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec == std::errc{} && p == end) return v;
  double d = 0;
  auto [q, ec2] = std::from_chars(text.data(), end, d);
  if (ec2 != std::errc{} || q != end || d < 0 || d != std::floor(d) || d > 1e15) {
    throw UsageError("not a size: '" + text + "'");
  }
  return static_cast<std::size_t>(d);
}

std::vector<std::size_t> ParseSizes(const std::vector<std::string>& items) {
  std::vector<std::size_t> out;
  for (const auto& s : items) out.push_back(ParseSize(s));
  return out;
}

std::vector<DegreeTypePair> ParsePairs(const std::vector<std::string>& items) {
  if (items.empty()) return AllPairList();
  std::vector<DegreeTypePair> out;
  for (const auto& s : items) {
    auto p = DegreeTypePair::Parse(s);
    if (!p) throw UsageError("unknown pair '" + s + "'");
    out.push_back(*p);
  }
  return out;
}

std::vector<Measure> ParseMeasures(const std::vector<std::string>& items) {
  if (items.empty()) return AllMeasureList();
  std::vector<Measure> out;
  for (const auto& s : items) {
    auto m = ParseMeasure(s);
    if (!m) throw UsageError("unknown measure '" + s + "'");
    out.push_back(*m);
  }
  return out;
}

Model ParseModelOrThrow(const std::string& s) {
  auto m = ParseModel(s);
  if (!m) throw UsageError("unknown model '" + s + "'");
  return *m;
}

Pmf ParseLawOrThrow(const std::string& spec, const LawOptions& options) {
  try {
    return ParseLaw(spec, options);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void WarnIfMeansDiffer(const Pmf& out_law, const Pmf& in_law) {
  const double mo = out_law.Mean();
  const double mi = in_law.Mean();
  if (std::abs(mo - mi) > 0.05 * std::max(mo, mi)) {
    std::cerr << "warning: out-law mean " << mo << " and in-law mean " << mi
              << " differ; balancing will add many stubs\n";
  }
}

// Opens `path` for writing; "-" or empty means stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
    if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    path_ = path;
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void Close() {
    if (!file_) {
      std::cout.flush();
      return;
    }
    file_->close();
    if (!*file_) throw IoError("error writing '" + path_ + "'");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::string path_;
};

// ---- generate ----

struct GenerateArgs {
  std::string model = "ecm";
  std::string n = "1000";
  std::string out_law;
  std::string in_law;
  std::uint64_t seed = 0;
  std::size_t max_attempts = kDefaultMaxAttempts;
  std::string output;
};

int RunGenerate(const GenerateArgs& a) {
  const LawOptions options = LawOptions::FromEnvironment();
  const Model model = ParseModelOrThrow(a.model);
  const std::size_t n = ParseSize(a.n);
  if (n == 0) throw UsageError("--n must be positive");
  const Pmf out_law = ParseLawOrThrow(a.out_law, options);
  const Pmf in_law = ParseLawOrThrow(a.in_law, options);
  WarnIfMeansDiffer(out_law, in_law);

  GenerationResult gen;
  try {
    gen = GenerateModel(model, n, out_law, in_law, a.max_attempts, a.seed);
  } catch (const GenerationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGeneration;
  }

  Output graph_out(a.output);
  WriteEdgeList(graph_out.stream(), gen.graph);
  graph_out.Close();

  nlohmann::ordered_json meta = {
      {"model", std::string(Name(model))},
      {"n", n},
      {"out_law", a.out_law},
      {"in_law", a.in_law},
      {"seed", a.seed},
      {"zeta_kmax", options.zeta_kmax},
      {"nodes", gen.graph.node_count()},
      {"edges", gen.graph.edge_count()},
      {"attempts", gen.attempts},
      {"bidegree",
       {{"total_stubs", gen.bidegree.total_stubs()},
        {"balance_added", gen.bidegree.balance_added},
        {"means_mismatched", gen.bidegree.means_mismatched}}},
      {"erasure",
       {{"self_loops_removed", gen.ledger.self_loops_removed},
        {"multi_edges_merged", gen.ledger.multi_edges_merged},
        {"total_erased", gen.ledger.total_erased()}}},
      {"simple", IsSimple(gen.graph)},
  };
  if (!a.output.empty() && a.output != "-") {
    Output meta_out(a.output + ".meta.json");
    meta_out.stream() << meta.dump(2) << '\n';
    meta_out.Close();
  }
  return kOk;
}

// ---- measure ----

struct MeasureArgs {
  std::string input;
  std::optional<std::size_t> nodes;
  std::vector<std::string> pairs;
  std::vector<std::string> measures;
  std::uint64_t seed = 0;
  std::size_t tie_break_replicas = 1;
  std::string format = "json";
  std::string output;
};

int RunMeasure(const MeasureArgs& a) {
  ReportOptions options;
  options.pairs = ParsePairs(a.pairs);
  options.measures = ParseMeasures(a.measures);
  options.seed = a.seed;
  options.tie_break_replicas = a.tie_break_replicas;
  if (options.tie_break_replicas == 0) throw UsageError("--tie-break-replicas must be positive");

  DirectedMultigraph g;
  try {
    g = a.input == "-" ? ReadEdgeList(std::cin, "<stdin>", a.nodes)
                       : ReadEdgeListFile(a.input, a.nodes);
  } catch (const std::exception& e) {
    throw IoError(e.what());
  }
  CorrelationReport report;
  try {
    report = FullReport(g, options);
  } catch (const InsufficientEdgesError& e) {
    throw IoError(a.input + ": " + e.what());
  }

  Output out(a.output);
  if (a.format == "csv") {
    out.stream() << ReportToCsv(report);
  } else {
    out.stream() << ReportToJson(report) << '\n';
  }
  out.Close();
  return kOk;
}

// ---- experiment ----

struct SweepArgs {
  std::string model;
  std::vector<std::string> sizes;
  std::size_t replicas = 20;
  std::string out_law;
  std::string in_law;
  std::vector<std::string> pairs;
  std::vector<std::string> measures;
  std::uint64_t seed = 0;
  std::size_t tie_break_replicas = kDefaultSweepTieBreakReplicas;
  std::size_t max_attempts = kDefaultMaxAttempts;
  std::size_t threads = 0;
  std::string joint;
  std::string output;
  std::string summary;
  bool no_runtime = false;
};

ExperimentConfig ToConfig(const SweepArgs& a) {
  ExperimentConfig c;
  c.model = ParseModelOrThrow(a.model);
  c.sizes = ParseSizes(a.sizes);
  c.replicas = a.replicas;
  c.out_law = a.out_law;
  c.in_law = a.in_law;
  c.pairs = ParsePairs(a.pairs);
  c.measures = ParseMeasures(a.measures);
  c.seed = a.seed;
  c.tie_break_replicas = a.tie_break_replicas;
  c.max_attempts = a.max_attempts;
  c.threads = a.threads;
  c.law_options = LawOptions::FromEnvironment();
  try {
    c.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  WarnIfMeansDiffer(ParseLawOrThrow(c.out_law, c.law_options),
                    ParseLawOrThrow(c.in_law, c.law_options));
  return c;
}

// Rows go to --output (stdout by default). The summary goes to --summary,
// else <output>.summary.csv, else stderr.
void WriteSweep(const SweepArgs& a, const std::vector<ExperimentRow>& rows) {
  Output out(a.output);
  WriteRowsCsv(out.stream(), rows, !a.no_runtime);
  out.Close();

  const auto summary = Summarize(rows);
  std::string summary_path = a.summary;
  if (summary_path.empty() && !a.output.empty() && a.output != "-") {
    summary_path = a.output + ".summary.csv";
  }
  if (summary_path.empty()) {
    WriteSummaryCsv(std::cerr, summary);
    return;
  }
  Output s(summary_path);
  WriteSummaryCsv(s.stream(), summary);
  s.Close();
}

int RunNullModelCommand(const SweepArgs& a) {
  WriteSweep(a, RunNullModel(ToConfig(a)));
  return kOk;
}

int RunTable1Command(const SweepArgs& a) {
  WriteSweep(a, RunTable1(ToConfig(a)));
  return kOk;
}

int RunConsistencyCommand(const SweepArgs& a) {
  std::optional<JointPmf> joint = BuiltinJoint(a.joint);
  if (!joint) {
    std::ifstream in(a.joint);
    if (!in) throw IoError("'" + a.joint + "' is neither a built-in joint nor a readable file");
    try {
      joint = ReadJointPmf(in, a.joint);
    } catch (const ParseError& e) {
      throw IoError(e.what());
    }
  }
  if (joint->marginal_x().IsPointMass() || joint->marginal_y().IsPointMass()) {
    throw UsageError("degenerate joint law: a marginal is a point mass");
  }
  ConsistencyConfig c;
  c.sizes = ParseSizes(a.sizes);
  c.replicas = a.replicas;
  c.seed = a.seed;
  c.tie_break_replicas = a.tie_break_replicas;
  c.threads = a.threads;
  std::vector<ExperimentRow> rows;
  try {
    rows = RunConsistency(*joint, c);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  WriteSweep(a, rows);
  return kOk;
}

void AddSweepOutputs(CLI::App* cmd, SweepArgs& a) {
  cmd->add_option("--sizes", a.sizes, "Graph sizes, comma separated (1e4 accepted)")
      ->delimiter(',')
      ->required();
  cmd->add_option("--replicas", a.replicas, "Replicas per size")->capture_default_str();
  cmd->add_option("--seed", a.seed, "Master seed")->capture_default_str();
  cmd->add_option("--threads", a.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  cmd->add_option("-o,--output", a.output, "Row CSV path (default stdout)");
  cmd->add_option("--summary", a.summary, "Summary CSV path (default <output>.summary.csv)");
  cmd->add_flag("--no-runtime", a.no_runtime, "Write runtime_ms as 0");
}

void AddModelOptions(CLI::App* cmd, SweepArgs& a) {
  cmd->add_option("--model", a.model, "cm, rcm or ecm")->capture_default_str();
  cmd->add_option("--out-law", a.out_law, "Out-degree law")->required();
  cmd->add_option("--in-law", a.in_law, "In-degree law")->required();
  cmd->add_option("--pairs", a.pairs, "Degree-type pairs")->delimiter(',');
  cmd->add_option("--max-attempts", a.max_attempts, "RCM re-pairing budget")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-degree dependencies in directed networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "degcorr 0.1.0");

  const std::string law_help =
      "Law: zeta:a, poisson:l, geometric:p, uniform:a..b or point:k";

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Generate a configuration-model graph");
  generate->add_option("--model", gen.model, "cm, rcm or ecm")->capture_default_str();
  generate->add_option("--n", gen.n, "Number of nodes")->capture_default_str();
  generate->add_option("--out-law", gen.out_law, law_help)->required();
  generate->add_option("--in-law", gen.in_law, law_help)->required();
  generate->add_option("--seed", gen.seed, "Seed")->capture_default_str();
  generate->add_option("--max-attempts", gen.max_attempts, "RCM re-pairing budget")
      ->capture_default_str();
  generate
      ->add_option("-o,--output", gen.output,
                   "Edge-list path; metadata goes to <path>.meta.json")
      ->required();

  MeasureArgs meas;
  auto* measure = app.add_subcommand("measure", "Degree-degree correlations of an edge list");
  measure->add_option("graph", meas.input, "Edge-list path or - for stdin")->required();
  measure->add_option("--nodes", meas.nodes, "Node count (default max id + 1)");
  measure->add_option("--pairs", meas.pairs, "out-in,in-out,out-out,in-in")->delimiter(',');
  measure->add_option("--measures", meas.measures,
                      "spearman_uniform,spearman_average,kendall,pearson")
      ->delimiter(',');
  measure->add_option("--seed", meas.seed, "Tie-break seed")->capture_default_str();
  measure->add_option("--tie-break-replicas", meas.tie_break_replicas,
                      "Tie-break realizations averaged")
      ->capture_default_str();
  measure->add_option("--format", meas.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  measure->add_option("-o,--output", meas.output, "Output path (default stdout)");

  auto* experiment = app.add_subcommand("experiment", "Canned Monte Carlo experiments");
  experiment->require_subcommand(1);

  SweepArgs null_args;
  null_args.model = "ecm";
  auto* null_model = experiment->add_subcommand("null-model", "Correlations under CM/RCM/ECM");
  AddModelOptions(null_model, null_args);
  AddSweepOutputs(null_model, null_args);
  null_model->add_option("--measures", null_args.measures, "Measures")->delimiter(',');
  null_model->add_option("--tie-break-replicas", null_args.tie_break_replicas,
                         "Tie-break realizations averaged")
      ->capture_default_str();

  SweepArgs cons_args;
  auto* consistency =
      experiment->add_subcommand("consistency", "Estimators on i.i.d. pairs vs population values");
  consistency
      ->add_option("--joint", cons_args.joint,
                   "diagonal-bernoulli, antidiagonal-bernoulli, product-bernoulli or a "
                   "joint-pmf file")
      ->required();
  AddSweepOutputs(consistency, cons_args);
  consistency->add_option("--tie-break-replicas", cons_args.tie_break_replicas,
                          "Tie-break realizations averaged")
      ->capture_default_str();

  SweepArgs table_args;
  table_args.model = "cm";
  auto* table1 =
      experiment->add_subcommand("table1", "Endpoint-degree laws of CM graphs vs their limits");
  AddModelOptions(table1, table_args);
  AddSweepOutputs(table1, table_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*generate) return RunGenerate(gen);
    if (*measure) return RunMeasure(meas);
    if (*null_model) return RunNullModelCommand(null_args);
    if (*consistency) return RunConsistencyCommand(cons_args);
    if (*table1) return RunTable1Command(table_args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const GenerationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kGeneration;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}
