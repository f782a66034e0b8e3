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

#include "miso/acquisition.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace miso {

namespace {

constexpr double kPiSquared = 9.8696044010893586188;

void check_context(const AcquisitionContext& ctx) {
  if (ctx.agp == nullptr || ctx.sources == nullptr || ctx.sources->empty()) {
    throw std::invalid_argument("acquisition: context must reference an AGP and sources");
  }
}

}  // namespace

double acquisition_score(double incumbent, double mean, double sd, double beta, double cost_ucb,
                         double discrepancy) {
  const double optimistic = mean - std::sqrt(std::max(0.0, beta)) * sd;
  return (incumbent - optimistic) / (1.0 + cost_ucb * discrepancy);
}

double acquisition_value(const AcquisitionContext& ctx, int source_id,
                         const Eigen::VectorXd& x) {
  check_context(ctx);
  const auto& source = ctx.sources->at(static_cast<std::size_t>(source_id - 1));
  const Prediction agp_pred = ctx.agp->model.predict(x);
  double cost = source.cost_ucb(x);
  if (!ctx.cost_scale.empty()) {
    cost /= ctx.cost_scale.at(static_cast<std::size_t>(source_id - 1));
  }
  const double eta = std::abs(agp_pred.mean - source.value_model().predict(x).mean);
  return acquisition_score(ctx.agp->incumbent_value, agp_pred.mean, std::sqrt(agp_pred.variance),
                           ctx.beta, cost, eta);
}

double beta_schedule(int t, int dim, double delta_conf) {
  if (t < 1) throw std::invalid_argument("beta_schedule: t must be >= 1");
  if (dim < 1 || delta_conf <= 0.0) {
    throw std::invalid_argument("beta_schedule: need dim >= 1 and delta_conf > 0");
  }
  const double tt = static_cast<double>(t);
  return 2.0 * std::log(static_cast<double>(dim) * tt * tt * kPiSquared / (6.0 * delta_conf));
}

Candidate select_next(const AcquisitionContext& ctx, const SearchOptions& search) {
  check_context(ctx);
  const int dim = ctx.agp->model.dim();
  const std::vector<Eigen::VectorXd> extra = {ctx.agp->incumbent_location};

  Candidate best;
  best.value = -std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < ctx.sources->size(); ++s) {
    if (!(*ctx.sources)[s].fitted()) continue;
    const int source_id = (*ctx.sources)[s].source_id();
    auto objective = [&](const Eigen::VectorXd& x) {
      return acquisition_value(ctx, source_id, x);
    };
    const SimplexResult r = multistart_maximize(objective, dim, extra, search);
    // Strict improvement only: on a value tie the earlier (lower) source
    // wins; the lexicographic tie-break already happened per source inside
    // multistart_maximize.
    if (r.value > best.value) {
      best.source_id = source_id;
      best.location = r.x;
      best.value = r.value;
    }
  }
  if (best.source_id == 0) throw std::invalid_argument("select_next: no fitted source");
  return best;
}

Candidate apply_correction(const Candidate& cand, const std::vector<SourceState>& sources,
                           const AugmentedModel& agp, double delta_min,
                           const SearchOptions& search) {
  const auto& chosen = sources.at(static_cast<std::size_t>(cand.source_id - 1));
  bool near_duplicate = false;
  for (const auto& obs : chosen.data()) {
    if ((obs.location - cand.location).norm() < delta_min) {
      near_duplicate = true;
      break;
    }
  }
  if (!near_duplicate) return cand;

  const GPModel& f1 = sources.front().value_model();
  auto objective = [&](const Eigen::VectorXd& x) { return std::sqrt(f1.predict(x).variance); };
  const SimplexResult r = multistart_maximize(objective, f1.dim(),
                                              {agp.incumbent_location}, search);
  Candidate corrected;
  corrected.source_id = sources.front().source_id();
  corrected.location = r.x;
  corrected.value = r.value;
  corrected.corrected = true;
  return corrected;
}

}  // namespace miso
