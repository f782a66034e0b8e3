// Copyright 2026 The misobo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MISO_EXPERIMENT_HPP
#define MISO_EXPERIMENT_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "miso/baselines.hpp"
#include "miso/optimizer.hpp"

namespace miso {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Command-line overrides; each set value wins over the config file.
struct FlagOverrides {
  std::optional<std::string> problem;
  std::optional<std::string> algorithm;
  std::optional<std::uint64_t> seed;  // replaces the whole seed list
  std::optional<std::string> out_dir;
  std::optional<int> max_evals;
  std::optional<double> budget;
};

struct ExperimentConfig {
  std::string problem;
  std::string algorithm;
  std::vector<std::uint64_t> seeds;  // defaults to 1..10
  RunConfig run;
  std::filesystem::path output_dir = "results";
};

// Reads the flat JSON config (all fields optional), applies flag overrides,
// fills defaults and validates. Unknown keys, unknown problem/algorithm
// names and invalid field values raise ConfigError before any run starts.
ExperimentConfig parse_config(const std::optional<std::filesystem::path>& config_file,
                              const FlagOverrides& flags);

struct RunEntry {
  std::uint64_t seed = 0;
  bool ok = false;
  double best_value = 0.0;
  double total_cost = 0.0;
  std::string error;
};

struct ExperimentSummary {
  std::string problem;
  std::string algorithm;
  std::vector<RunEntry> runs;
  int n_failed = 0;
  // Aggregates over successful runs; population standard deviation.
  double best_value_mean = 0.0;
  double best_value_std = 0.0;
  double best_value_median = 0.0;
  double total_cost_mean = 0.0;
  double total_cost_std = 0.0;
  double total_cost_median = 0.0;
};

// One seeded run per entry of cfg.seeds; writes a history CSV and a result
// JSON per run plus one aggregate summary JSON. Failed runs keep their
// partial history on disk and are reported in the summary.
ExperimentSummary run_experiment(const ExperimentConfig& cfg);

// Dispatches on cfg.run.algorithm.
RunResult run_algorithm(const SyntheticProblem& problem, const RunConfig& config);

// History CSV, RFC-4180 (CRLF, header row). Columns:
// iteration,phase,source_id,x_1..x_d,value,cost,cumulated_cost,
// incumbent_value,corrected.
void write_history_csv(std::ostream& out, const RunHistory& history, int dim);

nlohmann::json result_to_json(const ExperimentConfig& cfg, std::uint64_t seed,
                              const RunResult& result);
nlohmann::json summary_to_json(const ExperimentSummary& summary, bool with_timestamp = true);
ExperimentSummary summary_from_json(const nlohmann::json& j);

// Cost ratio of two experiment summaries, in percent:
// 100 * candidate.total_cost_mean / baseline.total_cost_mean. Pairs a
// multi-source summary against its single-source baseline.
double cost_percent(const ExperimentSummary& candidate, const ExperimentSummary& baseline);

nlohmann::json compare_to_json(const ExperimentSummary& candidate,
                               const ExperimentSummary& baseline);

std::filesystem::path history_path(const ExperimentConfig& cfg, std::uint64_t seed);
std::filesystem::path result_path(const ExperimentConfig& cfg, std::uint64_t seed);
std::filesystem::path summary_path(const ExperimentConfig& cfg);

}  // namespace miso

#endif  // MISO_EXPERIMENT_HPP
