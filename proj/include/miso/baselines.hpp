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

#ifndef MISO_BASELINES_HPP
#define MISO_BASELINES_HPP

#include <Eigen/Core>

#include "miso/gp.hpp"
#include "miso/optimizer.hpp"
#include "miso/problems.hpp"

namespace miso {

// Budget bookkeeping for cost-cooling: tau is the total budget, tau_init the
// cost of the initial design, tau_n the cost cumulated so far.
struct CoolingState {
  double tau = 0.0;
  double tau_init = 0.0;
  double tau_n = 0.0;
};

// Minimization expected improvement. With g = best - mean and u = g/sd:
// EI = g Phi(u) + sd phi(u); degenerate sd yields max(g, 0).
double expected_improvement(double mean, double sd, double best);

// Cooling factor (tau - tau_n) / (tau - tau_init), clamped to [0, 1]. An
// exhausted or degenerate budget (tau <= tau_init) counts as fully cooled.
double cooling_alpha(const CoolingState& state);

// EI(x) / max(cbar(x), 1e-6)^alpha with cbar the cost-GP posterior mean.
// alpha = 0 is plain EI, alpha = 1 is EI per unit cost.
double ei_cool_value(const Eigen::VectorXd& x, const GPModel& value_model,
                     const GPModel& cost_model, const CoolingState& state);

// Single-source cost-aware loop on f_1: LHS init, then maximize EI, EI-pu or
// EI-cool (per config.algorithm) with the shared multi-start search. Shares
// the RunHistory schema with the multi-source loop. The ei-cool variant
// requires config.budget.
RunResult run_baseline(const SyntheticProblem& problem, const RunConfig& config);

}  // namespace miso

#endif  // MISO_BASELINES_HPP
