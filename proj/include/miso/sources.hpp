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

#ifndef MISO_SOURCES_HPP
#define MISO_SOURCES_HPP

#include <Eigen/Core>
#include <stdexcept>
#include <utility>
#include <vector>

#include "miso/gp.hpp"

namespace miso {

struct NonpositiveCost : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// One coupled query: the function value and its query cost are observed
// together and recorded together.
struct Observation {
  Eigen::VectorXd location;  // normalized, in [0,1]^d
  double value = 0.0;
  double cost = 0.0;  // strictly positive
};

struct SourceOptions {
  // Fit the cost model on log-costs; predictions are mapped back to the raw
  // scale. Off by default (raw costs, plain GP).
  bool cost_log_transform = false;
  FitOptions fit;
};

// Per-source record: the dataset and the twin GPs over its value and cost
// projections. Updated by a single owner; the fitted models are immutable
// snapshots, safe for concurrent reads.
class SourceState {
 public:
  SourceState(int source_id, int dim, SourceOptions options = {});

  // Assembles a state around externally fitted models. The models must be
  // trained on the projections of `data`; intended for controlled setups
  // (tests, custom fitting schedules).
  static SourceState from_parts(int source_id, std::vector<Observation> data,
                                GPModel value_model, GPModel cost_model,
                                SourceOptions options = {});

  int source_id() const { return source_id_; }
  int dim() const { return dim_; }
  int size() const { return static_cast<int>(data_.size()); }
  bool fitted() const { return !data_.empty(); }
  const std::vector<Observation>& data() const { return data_; }
  const SourceOptions& options() const { return options_; }

  const GPModel& value_model() const;
  const GPModel& cost_model() const;

  // Projections of the dataset: (locations, values) and (locations, costs).
  // Together they reconstruct every observation exactly.
  std::pair<Eigen::MatrixXd, Eigen::VectorXd> function_data() const;
  std::pair<Eigen::MatrixXd, Eigen::VectorXd> cost_data() const;

  // Cost-GP posterior mean on the raw cost scale.
  double cost_mean(const Eigen::VectorXd& x) const;
  // Pessimistic cost estimate max{0, p(x) + q(x)} on the raw cost scale.
  double cost_ucb(const Eigen::VectorXd& x) const;

  void add(const Observation& obs);  // validates, appends, refits both models

 private:
  int source_id_;
  int dim_;
  SourceOptions options_;
  std::vector<Observation> data_;
  GPModel value_model_;
  GPModel cost_model_;

  void refit();
};

// Appends one observation and refits both models. Rejects nonpositive costs.
SourceState ingest(SourceState state, const Observation& obs);

// Simplified model discrepancy: |mu_a(x) - mu_b(x)| on the raw output scale.
double discrepancy(const GPModel& model_a, const GPModel& model_b, const Eigen::VectorXd& x);

// Clamped upper confidence bound of a cost posterior.
inline double cost_ucb_value(double mean, double sd) { return std::max(0.0, mean + sd); }

double cost_ucb(const SourceState& state, const Eigen::VectorXd& x);

}  // namespace miso

#endif  // MISO_SOURCES_HPP
