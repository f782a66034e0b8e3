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

// Batch experiment runner: seeded runs of any algorithm on any benchmark
// problem, with machine-readable histories and summaries.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "miso/experiment.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRunFailure = 1;
constexpr int kExitConfigError = 2;

int command_run(const std::optional<std::string>& config_file, const miso::FlagOverrides& flags) {
  std::optional<std::filesystem::path> path;
  if (config_file) path = *config_file;
  const miso::ExperimentConfig cfg = miso::parse_config(path, flags);
  const miso::ExperimentSummary summary = miso::run_experiment(cfg);

  std::printf("%s on %s: %zu run(s), %d failed\n", cfg.algorithm.c_str(), cfg.problem.c_str(),
              summary.runs.size(), summary.n_failed);
  if (summary.runs.size() > static_cast<std::size_t>(summary.n_failed)) {
    std::printf("  best_value  %.6g +/- %.6g (median %.6g)\n", summary.best_value_mean,
                summary.best_value_std, summary.best_value_median);
    std::printf("  total_cost  %.6g +/- %.6g (median %.6g)\n", summary.total_cost_mean,
                summary.total_cost_std, summary.total_cost_median);
  }
  std::printf("  outputs in %s\n", cfg.output_dir.string().c_str());
  return summary.n_failed == 0 ? kExitOk : kExitRunFailure;
}

miso::ExperimentSummary load_summary(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw miso::ConfigError("summary file not found: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw miso::ConfigError("summary file is not valid JSON: " + std::string(e.what()));
  }
  return miso::summary_from_json(j);
}

int command_compare(const std::string& candidate_path, const std::string& baseline_path,
                    const std::optional<std::string>& out_path) {
  const auto candidate = load_summary(candidate_path);
  const auto baseline = load_summary(baseline_path);
  const nlohmann::json j = miso::compare_to_json(candidate, baseline);
  std::cout << j.dump(2) << '\n';
  if (out_path) {
    std::ofstream out(*out_path);
    out << j.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-information-source, cost-aware Bayesian optimization benchmarks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Execute seeded runs and write histories + summary");
  std::optional<std::string> config_file;
  miso::FlagOverrides flags;
  run->add_option("--config", config_file, "JSON config file (flat object)");
  run->add_option("--problem", flags.problem, "Problem name (see list-problems)");
  run->add_option("--algorithm", flags.algorithm, "Algorithm name (see list-algorithms)");
  run->add_option("--seed", flags.seed, "Single seed, replaces the config seed list");
  run->add_option("--out-dir", flags.out_dir, "Output directory (default: results)");
  run->add_option("--max-evals", flags.max_evals, "Evaluation cap after the initial design");
  run->add_option("--budget", flags.budget, "Cumulated-cost cap");

  auto* list_problems = app.add_subcommand("list-problems", "List benchmark problems");
  auto* list_algorithms = app.add_subcommand("list-algorithms", "List algorithms");

  auto* compare = app.add_subcommand(
      "compare", "Cost ratio (percent) of a candidate summary vs a baseline summary");
  std::string candidate_path, baseline_path;
  std::optional<std::string> compare_out;
  compare->add_option("candidate", candidate_path, "Candidate summary JSON")->required();
  compare->add_option("baseline", baseline_path, "Baseline summary JSON")->required();
  compare->add_option("--out", compare_out, "Also write the comparison JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfigError;
  }

  try {
    if (list_problems->parsed()) {
      for (const auto& name : miso::problem_names()) std::printf("%s\n", name.c_str());
      return kExitOk;
    }
    if (list_algorithms->parsed()) {
      for (const auto& name : miso::algorithm_names()) std::printf("%s\n", name.c_str());
      return kExitOk;
    }
    if (compare->parsed()) {
      return command_compare(candidate_path, baseline_path, compare_out);
    }
    return command_run(config_file, flags);
  } catch (const miso::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRunFailure;
  }
}
