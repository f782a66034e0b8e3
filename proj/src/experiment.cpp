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

#include "miso/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

namespace miso {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct Stats {
  double mean = 0.0;
  double std = 0.0;
  double median = 0.0;
};

Stats compute_stats(std::vector<double> values) {
  Stats s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(ss / n);  // population convention
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  s.median = values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
  return s;
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void require(bool cond, const std::string& message) {
  if (!cond) throw ConfigError(message);
}

template <typename T>
T get_field(const nlohmann::json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config field '" + key + "': " + e.what());
  }
}

std::string file_stem(const ExperimentConfig& cfg) {
  return cfg.problem + "_" + cfg.algorithm;
}

}  // namespace

ExperimentConfig parse_config(const std::optional<std::filesystem::path>& config_file,
                              const FlagOverrides& flags) {
  ExperimentConfig cfg;
  cfg.seeds.resize(10);
  std::iota(cfg.seeds.begin(), cfg.seeds.end(), 1);

  if (config_file) {
    std::ifstream in(*config_file);
    require(in.good(), "config file not found: " + config_file->string());
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("config file is not valid JSON: ") + e.what());
    }
    require(j.is_object(), "config must be a JSON object");

    static const std::vector<std::string> known = {
        "problem",       "algorithm", "seeds",     "n_init_per_source",
        "max_evaluations", "m",       "delta_min", "budget",
        "output_dir",    "cost_log_transform",     "cost_scaling",
        "delta_conf"};
    for (const auto& [key, _] : j.items()) {
      require(std::find(known.begin(), known.end(), key) != known.end(),
              "unknown config field '" + key + "'");
    }

    if (j.contains("problem")) cfg.problem = get_field<std::string>(j, "problem");
    if (j.contains("algorithm")) cfg.algorithm = get_field<std::string>(j, "algorithm");
    if (j.contains("seeds")) {
      cfg.seeds = get_field<std::vector<std::uint64_t>>(j, "seeds");
    }
    if (j.contains("n_init_per_source")) {
      cfg.run.n_init_per_source = get_field<int>(j, "n_init_per_source");
    }
    if (j.contains("max_evaluations")) {
      cfg.run.max_evaluations = get_field<int>(j, "max_evaluations");
    }
    if (j.contains("m")) cfg.run.m = get_field<double>(j, "m");
    if (j.contains("delta_min")) cfg.run.delta_min = get_field<double>(j, "delta_min");
    if (j.contains("budget")) cfg.run.budget = get_field<double>(j, "budget");
    if (j.contains("output_dir")) cfg.output_dir = get_field<std::string>(j, "output_dir");
    if (j.contains("cost_log_transform")) {
      cfg.run.cost_log_transform = get_field<bool>(j, "cost_log_transform");
    }
    if (j.contains("delta_conf")) cfg.run.delta_conf = get_field<double>(j, "delta_conf");
    if (j.contains("cost_scaling")) {
      const auto mode = get_field<std::string>(j, "cost_scaling");
      if (mode == "none") {
        cfg.run.cost_scaling = CostScaling::None;
      } else if (mode == "mean_init") {
        cfg.run.cost_scaling = CostScaling::MeanInit;
      } else {
        throw ConfigError("cost_scaling must be 'none' or 'mean_init', got '" + mode + "'");
      }
    }
  }

  if (flags.problem) cfg.problem = *flags.problem;
  if (flags.algorithm) cfg.algorithm = *flags.algorithm;
  if (flags.seed) cfg.seeds = {*flags.seed};
  if (flags.out_dir) cfg.output_dir = *flags.out_dir;
  if (flags.max_evals) cfg.run.max_evaluations = *flags.max_evals;
  if (flags.budget) cfg.run.budget = *flags.budget;

  require(!cfg.problem.empty(), "field 'problem' is required");
  require(!cfg.algorithm.empty(), "field 'algorithm' is required");
  const auto problems = problem_names();
  require(std::find(problems.begin(), problems.end(), cfg.problem) != problems.end(),
          "unknown problem '" + cfg.problem + "'");
  try {
    cfg.run.algorithm = algorithm_from_string(cfg.algorithm);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  require(!cfg.seeds.empty(), "field 'seeds' must be non-empty");
  require(cfg.run.algorithm != Algorithm::EiCool || cfg.run.budget.has_value(),
          "algorithm 'ei-cool' requires 'budget'");
  try {
    cfg.run.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunResult run_algorithm(const SyntheticProblem& problem, const RunConfig& config) {
  return config.algorithm == Algorithm::MisoWild ? run_miso_wild(problem, config)
                                                 : run_baseline(problem, config);
}

void write_history_csv(std::ostream& out, const RunHistory& history, int dim) {
  out << "iteration,phase,source_id";
  for (int i = 1; i <= dim; ++i) out << ",x_" << i;
  out << ",value,cost,cumulated_cost,incumbent_value,corrected\r\n";
  for (const auto& r : history.records) {
    out << r.iteration << ',' << to_string(r.phase) << ',' << r.source_id;
    for (int i = 0; i < dim; ++i) out << ',' << format_double(r.location[i]);
    out << ',' << format_double(r.value) << ',' << format_double(r.cost) << ','
        << format_double(r.cumulated_cost) << ',' << format_double(r.incumbent_value) << ','
        << (r.corrected ? 1 : 0) << "\r\n";
  }
}

std::filesystem::path history_path(const ExperimentConfig& cfg, std::uint64_t seed) {
  return cfg.output_dir / ("history_" + file_stem(cfg) + "_seed" + std::to_string(seed) + ".csv");
}

std::filesystem::path result_path(const ExperimentConfig& cfg, std::uint64_t seed) {
  return cfg.output_dir / ("result_" + file_stem(cfg) + "_seed" + std::to_string(seed) + ".json");
}

std::filesystem::path summary_path(const ExperimentConfig& cfg) {
  return cfg.output_dir / ("summary_" + file_stem(cfg) + ".json");
}

nlohmann::json result_to_json(const ExperimentConfig& cfg, std::uint64_t seed,
                              const RunResult& result) {
  nlohmann::json j;
  j["problem"] = cfg.problem;
  j["algorithm"] = cfg.algorithm;
  j["seed"] = seed;
  j["best_value"] = result.best_value;
  j["best_location"] = std::vector<double>(
      result.best_location.data(), result.best_location.data() + result.best_location.size());
  j["total_cost"] = result.total_cost;
  j["evaluations_per_source"] = result.evaluations_per_source;
  j["n_records"] = result.history.records.size();
  return j;
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg) {
  std::filesystem::create_directories(cfg.output_dir);
  const SyntheticProblem problem = make_problem(cfg.problem);

  ExperimentSummary summary;
  summary.problem = cfg.problem;
  summary.algorithm = cfg.algorithm;

  for (const std::uint64_t seed : cfg.seeds) {
    RunConfig run_cfg = cfg.run;
    run_cfg.seed = seed;
    RunEntry entry;
    entry.seed = seed;
    RunHistory history;
    try {
      RunResult result = run_algorithm(problem, run_cfg);
      entry.ok = true;
      entry.best_value = result.best_value;
      entry.total_cost = result.total_cost;
      std::ofstream rf(result_path(cfg, seed));
      rf << result_to_json(cfg, seed, result).dump(2) << '\n';
      history = std::move(result.history);
    } catch (const RunAborted& e) {
      entry.ok = false;
      entry.error = e.what();
      history = e.history;
      ++summary.n_failed;
    }
    std::ofstream hf(history_path(cfg, seed), std::ios::binary);
    write_history_csv(hf, history, problem.space.dim());
    summary.runs.push_back(entry);
  }

  std::vector<double> bests, costs;
  for (const auto& r : summary.runs) {
    if (!r.ok) continue;
    bests.push_back(r.best_value);
    costs.push_back(r.total_cost);
  }
  const Stats bs = compute_stats(bests);
  const Stats cs = compute_stats(costs);
  summary.best_value_mean = bs.mean;
  summary.best_value_std = bs.std;
  summary.best_value_median = bs.median;
  summary.total_cost_mean = cs.mean;
  summary.total_cost_std = cs.std;
  summary.total_cost_median = cs.median;

  std::ofstream sf(summary_path(cfg));
  sf << summary_to_json(summary).dump(2) << '\n';
  return summary;
}

nlohmann::json summary_to_json(const ExperimentSummary& summary, bool with_timestamp) {
  nlohmann::json j;
  j["problem"] = summary.problem;
  j["algorithm"] = summary.algorithm;
  j["n_runs"] = summary.runs.size();
  j["n_failed"] = summary.n_failed;
  j["best_value"] = {{"mean", summary.best_value_mean},
                     {"std", summary.best_value_std},
                     {"median", summary.best_value_median}};
  j["total_cost"] = {{"mean", summary.total_cost_mean},
                     {"std", summary.total_cost_std},
                     {"median", summary.total_cost_median}};
  nlohmann::json runs = nlohmann::json::array();
  for (const auto& r : summary.runs) {
    nlohmann::json e;
    e["seed"] = r.seed;
    e["ok"] = r.ok;
    if (r.ok) {
      e["best_value"] = r.best_value;
      e["total_cost"] = r.total_cost;
    } else {
      e["error"] = r.error;
    }
    runs.push_back(e);
  }
  j["runs"] = runs;
  if (with_timestamp) j["metadata"] = {{"timestamp", utc_timestamp()}};
  return j;
}

ExperimentSummary summary_from_json(const nlohmann::json& j) {
  ExperimentSummary s;
  try {
    s.problem = j.at("problem").get<std::string>();
    s.algorithm = j.at("algorithm").get<std::string>();
    s.n_failed = j.at("n_failed").get<int>();
    s.best_value_mean = j.at("best_value").at("mean").get<double>();
    s.best_value_std = j.at("best_value").at("std").get<double>();
    s.best_value_median = j.at("best_value").at("median").get<double>();
    s.total_cost_mean = j.at("total_cost").at("mean").get<double>();
    s.total_cost_std = j.at("total_cost").at("std").get<double>();
    s.total_cost_median = j.at("total_cost").at("median").get<double>();
    for (const auto& e : j.at("runs")) {
      RunEntry r;
      r.seed = e.at("seed").get<std::uint64_t>();
      r.ok = e.at("ok").get<bool>();
      if (r.ok) {
        r.best_value = e.at("best_value").get<double>();
        r.total_cost = e.at("total_cost").get<double>();
      } else if (e.contains("error")) {
        r.error = e.at("error").get<std::string>();
      }
      s.runs.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed summary JSON: ") + e.what());
  }
  return s;
}

double cost_percent(const ExperimentSummary& candidate, const ExperimentSummary& baseline) {
  if (!(baseline.total_cost_mean > 0.0)) {
    throw std::invalid_argument("cost_percent: baseline mean cost must be positive");
  }
  return 100.0 * candidate.total_cost_mean / baseline.total_cost_mean;
}

nlohmann::json compare_to_json(const ExperimentSummary& candidate,
                               const ExperimentSummary& baseline) {
  nlohmann::json j;
  j["candidate"] = {{"problem", candidate.problem},
                    {"algorithm", candidate.algorithm},
                    {"best_value_mean", candidate.best_value_mean},
                    {"total_cost_mean", candidate.total_cost_mean}};
  j["baseline"] = {{"problem", baseline.problem},
                   {"algorithm", baseline.algorithm},
                   {"best_value_mean", baseline.best_value_mean},
                   {"total_cost_mean", baseline.total_cost_mean}};
  j["delta_best_value"] = candidate.best_value_mean - baseline.best_value_mean;
  j["cost_percent"] = cost_percent(candidate, baseline);
  return j;
}

}  // namespace miso
