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

#include "miso/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "miso/nelder_mead.hpp"

namespace miso {

namespace {

constexpr double kCostFloor = 1e-6;

double normal_pdf(double u) {
  constexpr double inv_sqrt_2pi = 0.3989422804014326779;
  return inv_sqrt_2pi * std::exp(-0.5 * u * u);
}

double normal_cdf(double u) { return 0.5 * std::erfc(-u * 0.70710678118654752440); }

double cooling_exponent(Algorithm algorithm, const CoolingState& state) {
  switch (algorithm) {
    case Algorithm::Ei: return 0.0;
    case Algorithm::EiPerUnitCost: return 1.0;
    case Algorithm::EiCool: return cooling_alpha(state);
    default:
      throw std::invalid_argument("run_baseline: expected ei, ei-pu or ei-cool");
  }
}

}  // namespace

double expected_improvement(double mean, double sd, double best) {
  const double g = best - mean;
  if (!(sd > 0.0)) return std::max(g, 0.0);
  const double u = g / sd;
  return std::max(0.0, g * normal_cdf(u) + sd * normal_pdf(u));
}

double cooling_alpha(const CoolingState& state) {
  if (!(state.tau > state.tau_init)) return 0.0;
  const double alpha = (state.tau - state.tau_n) / (state.tau - state.tau_init);
  return std::clamp(alpha, 0.0, 1.0);
}

double ei_cool_value(const Eigen::VectorXd& x, const GPModel& value_model,
                     const GPModel& cost_model, const CoolingState& state) {
  const Prediction value_pred = value_model.predict(x);
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < value_model.size(); ++i) {
    best = std::min(best, value_model.y_mean + value_model.y_std * value_model.y[i]);
  }
  const double ei = expected_improvement(value_pred.mean, std::sqrt(value_pred.variance), best);
  const double cost = std::max(cost_model.predict(x).mean, kCostFloor);
  return ei / std::pow(cost, cooling_alpha(state));
}

RunResult run_baseline(const SyntheticProblem& problem, const RunConfig& config) {
  const int d = problem.space.dim();
  if (problem.num_sources() < 1) throw std::invalid_argument("run_baseline: no sources");
  if (config.algorithm == Algorithm::MisoWild) {
    throw std::invalid_argument("run_baseline: expected ei, ei-pu or ei-cool");
  }
  if (config.algorithm == Algorithm::EiCool && !config.budget) {
    throw std::invalid_argument("run_baseline: ei-cool requires a budget (tau)");
  }

  FitOptions fit;
  fit.seed = mix_seed(config.seed, 0x0f17);
  SourceOptions source_options;
  source_options.cost_log_transform = config.cost_log_transform;
  source_options.fit = fit;

  Rng eval_rng(mix_seed(config.seed, 0x0b5e));
  RunHistory history;
  double cumulated = 0.0;
  double best_value = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_location;

  SourceState source(1, d, source_options);

  auto log_record = [&](int iteration, Phase phase, const Observation& obs) {
    cumulated += obs.cost;
    if (obs.value < best_value) {
      best_value = obs.value;
      best_location = obs.location;
    }
    history.records.push_back(HistoryRecord{iteration, phase, 1,
                                            problem.space.denormalize(obs.location), obs.value,
                                            obs.cost, cumulated, best_value, false});
  };

  // Same derivation as the multi-source loop, so paired runs with equal
  // seeds share the f_1 initial design.
  const auto design = lhs_sample(config.n_init_per_source, d, mix_seed(config.seed, 1));
  for (const auto& u : design) {
    Observation obs;
    try {
      obs = evaluate(problem, 1, problem.space.denormalize(u), eval_rng);
    } catch (const SourceUnavailable& e) {
      throw RunAborted(e.what(), std::move(history));
    }
    source.add(obs);
    log_record(0, Phase::Init, obs);
  }

  const double tau_init = cumulated;
  for (int t = 1; t <= config.max_evaluations; ++t) {
    CoolingState cooling{config.budget.value_or(0.0), tau_init, cumulated};
    const double alpha = cooling_exponent(config.algorithm, cooling);
    const GPModel& value_model = source.value_model();
    const double best = best_value;
    auto objective = [&](const Eigen::VectorXd& x) {
      const Prediction p = value_model.predict(x);
      const double ei = expected_improvement(p.mean, std::sqrt(p.variance), best);
      const double cost = std::max(source.cost_mean(x), kCostFloor);
      return ei / std::pow(cost, alpha);
    };

    SearchOptions search;
    search.seed = mix_seed(config.seed, 0x05e1, static_cast<std::uint64_t>(t));
    const SimplexResult r = multistart_maximize(objective, d, {best_location}, search);

    if (config.budget) {
      const double pessimistic = source.cost_ucb(r.x);
      if (cumulated + pessimistic > *config.budget) break;
    }

    Observation obs;
    try {
      obs = evaluate(problem, 1, problem.space.denormalize(r.x), eval_rng);
    } catch (const SourceUnavailable& e) {
      throw RunAborted(e.what(), std::move(history));
    }
    source.add(obs);
    log_record(t, Phase::Optimize, obs);
  }

  RunResult result;
  result.best_location = problem.space.denormalize(best_location);
  result.best_value = best_value;
  result.total_cost = cumulated;
  result.history = std::move(history);
  result.evaluations_per_source.assign(static_cast<std::size_t>(problem.num_sources()), 0);
  result.evaluations_per_source[0] = source.size();
  return result;
}

}  // namespace miso
