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

#include "miso/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "miso/acquisition.hpp"

namespace miso {

namespace {

// Stream tags for deriving independent deterministic substreams from the
// run seed.
constexpr std::uint64_t kEvalStream = 0x0b5e;
constexpr std::uint64_t kFitStream = 0x0f17;
constexpr std::uint64_t kSelectStream = 0x05e1;
constexpr std::uint64_t kCorrectStream = 0x0c00;

}  // namespace

std::string to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::MisoWild: return "miso-wild";
    case Algorithm::Ei: return "ei";
    case Algorithm::EiPerUnitCost: return "ei-pu";
    case Algorithm::EiCool: return "ei-cool";
  }
  return "unknown";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "miso-wild") return Algorithm::MisoWild;
  if (name == "ei") return Algorithm::Ei;
  if (name == "ei-pu") return Algorithm::EiPerUnitCost;
  if (name == "ei-cool") return Algorithm::EiCool;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::vector<std::string> algorithm_names() { return {"miso-wild", "ei", "ei-pu", "ei-cool"}; }

std::string to_string(Phase phase) {
  switch (phase) {
    case Phase::Init: return "init";
    case Phase::Optimize: return "optimize";
    case Phase::FinalEval: return "final-eval";
  }
  return "unknown";
}

void RunConfig::validate() const {
  if (n_init_per_source < 2) {
    throw std::invalid_argument("n_init_per_source must be >= 2");
  }
  if (max_evaluations < 1) {
    throw std::invalid_argument("max_evaluations must be >= 1");
  }
  if (m < 0.0) throw std::invalid_argument("m must be >= 0");
  if (delta_min && !(*delta_min >= 0.0)) throw std::invalid_argument("delta_min must be >= 0");
  if (budget && !(*budget > 0.0)) throw std::invalid_argument("budget must be > 0");
  if (delta_conf <= 0.0) throw std::invalid_argument("delta_conf must be > 0");
}

double RunConfig::resolved_delta_min(int dim) const {
  return delta_min ? *delta_min : 1e-3 * std::sqrt(static_cast<double>(dim));
}

FinalSolution final_solution(const AugmentedModel& agp, const std::vector<SourceState>& sources,
                             const SyntheticProblem& problem, Rng& rng) {
  if (agp.inducing.empty()) {
    throw std::invalid_argument("final_solution: empty inducing set");
  }
  FinalSolution out;
  out.location = agp.incumbent_location;
  out.value = agp.incumbent_value;
  out.source_id = agp.incumbent_source;
  if (agp.incumbent_source != sources.front().source_id()) {
    const Observation confirm =
        evaluate(problem, sources.front().source_id(),
                 problem.space.denormalize(agp.incumbent_location), rng);
    out.value = confirm.value;
    out.extra_cost = confirm.cost;
  }
  return out;
}

RunResult run_miso_wild(const SyntheticProblem& problem, const RunConfig& config) {
  const int S = problem.num_sources();
  const int d = problem.space.dim();
  if (S < 1) throw std::invalid_argument("run_miso_wild: problem has no sources");
  if (config.n_init_per_source < 1) {
    throw std::invalid_argument("run_miso_wild: need at least one initial point per source");
  }

  const double delta_min = config.resolved_delta_min(d);
  FitOptions fit;
  fit.seed = mix_seed(config.seed, kFitStream);
  fit.learn_noise = true;

  SourceOptions source_options;
  source_options.cost_log_transform = config.cost_log_transform;
  source_options.fit = fit;

  Rng eval_rng(mix_seed(config.seed, kEvalStream));
  RunHistory history;
  std::vector<SourceState> sources;
  std::vector<int> eval_counts(static_cast<std::size_t>(S), 0);
  double cumulated = 0.0;
  double running_best_observed = std::numeric_limits<double>::infinity();

  auto log_record = [&](int iteration, Phase phase, int source_id, const Eigen::VectorXd& x_norm,
                        double value, double cost, double incumbent, bool corrected) {
    cumulated += cost;
    history.records.push_back(HistoryRecord{iteration, phase, source_id,
                                            problem.space.denormalize(x_norm), value, cost,
                                            cumulated, incumbent, corrected});
  };

  // Initial design: an independent LHS per source, evaluated in source order.
  for (int s = 1; s <= S; ++s) {
    sources.emplace_back(s, d, source_options);
    const auto design = lhs_sample(config.n_init_per_source, d,
                                   mix_seed(config.seed, static_cast<std::uint64_t>(s)));
    for (const auto& u : design) {
      Observation obs;
      try {
        obs = evaluate(problem, s, problem.space.denormalize(u), eval_rng);
      } catch (const SourceUnavailable& e) {
        throw RunAborted(e.what(), std::move(history));
      }
      sources.back().add(obs);
      ++eval_counts[static_cast<std::size_t>(s - 1)];
      running_best_observed = std::min(running_best_observed, obs.value);
      log_record(0, Phase::Init, s, obs.location, obs.value, obs.cost, running_best_observed,
                 false);
    }
  }

  // Per-source divisors for the optional scale-free cost penalty.
  std::vector<double> cost_scale;
  if (config.cost_scaling == CostScaling::MeanInit) {
    for (const auto& src : sources) {
      double total = 0.0;
      for (const auto& obs : src.data()) total += obs.cost;
      cost_scale.push_back(std::max(total / static_cast<double>(src.size()), 1e-12));
    }
  }

  double incumbent_running = std::numeric_limits<double>::infinity();
  AugmentedModel agp;
  for (int t = 1; t <= config.max_evaluations; ++t) {
    agp = build_agp(sources, config.m, fit);
    incumbent_running = std::min(incumbent_running, agp.incumbent_value);

    AcquisitionContext ctx;
    ctx.agp = &agp;
    ctx.sources = &sources;
    ctx.beta = beta_schedule(t, d, config.delta_conf);
    ctx.delta_min = delta_min;
    ctx.iteration = t;
    ctx.cost_scale = cost_scale;

    SearchOptions select_opts;
    select_opts.seed = mix_seed(config.seed, kSelectStream, static_cast<std::uint64_t>(t));
    Candidate cand = select_next(ctx, select_opts);
    SearchOptions correct_opts;
    correct_opts.seed = mix_seed(config.seed, kCorrectStream, static_cast<std::uint64_t>(t));
    cand = apply_correction(cand, sources, agp, delta_min, correct_opts);

    if (config.budget) {
      // Pessimistic pre-check: the true cost is unknown before paying it.
      const double pessimistic =
          sources[static_cast<std::size_t>(cand.source_id - 1)].cost_ucb(cand.location);
      if (cumulated + pessimistic > *config.budget) break;
    }

    Observation obs;
    try {
      obs = evaluate(problem, cand.source_id, problem.space.denormalize(cand.location), eval_rng);
    } catch (const SourceUnavailable& e) {
      throw RunAborted(e.what(), std::move(history));
    }
    sources[static_cast<std::size_t>(cand.source_id - 1)].add(obs);
    ++eval_counts[static_cast<std::size_t>(cand.source_id - 1)];
    log_record(t, Phase::Optimize, cand.source_id, obs.location, obs.value, obs.cost,
               incumbent_running, cand.corrected);
  }

  // Final extraction on a freshly rebuilt inducing set.
  agp = build_agp(sources, config.m, fit);
  incumbent_running = std::min(incumbent_running, agp.incumbent_value);

  FinalSolution fin;
  try {
    fin = final_solution(agp, sources, problem, eval_rng);
  } catch (const SourceUnavailable& e) {
    throw RunAborted(e.what(), std::move(history));
  }

  Eigen::VectorXd best_location = fin.location;
  double best_value = fin.value;
  // The reported surface is source 1: never report worse than its best
  // observed value.
  const SourceState& first = sources.front();
  int best_obs_index = -1;
  for (int i = 0; i < first.size(); ++i) {
    const auto& obs = first.data()[static_cast<std::size_t>(i)];
    if (best_obs_index < 0 ||
        obs.value < first.data()[static_cast<std::size_t>(best_obs_index)].value) {
      best_obs_index = i;
    }
  }
  if (best_obs_index >= 0) {
    const auto& obs = first.data()[static_cast<std::size_t>(best_obs_index)];
    if (obs.value < best_value) {
      best_value = obs.value;
      best_location = obs.location;
    }
  }

  if (fin.extra_cost > 0.0) {
    ++eval_counts[0];
    const int final_iter = config.max_evaluations + 1;
    log_record(final_iter, Phase::FinalEval, 1, fin.location, fin.value, fin.extra_cost,
               std::min(incumbent_running, best_value), false);
  }

  RunResult result;
  result.best_location = problem.space.denormalize(best_location);
  result.best_value = best_value;
  result.total_cost = cumulated;
  result.history = std::move(history);
  result.evaluations_per_source = std::move(eval_counts);
  return result;
}

}  // namespace miso
