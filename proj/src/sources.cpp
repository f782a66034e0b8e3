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

#include "miso/sources.hpp"

#include <cmath>

namespace miso {

SourceState::SourceState(int source_id, int dim, SourceOptions options)
    : source_id_(source_id), dim_(dim), options_(std::move(options)) {
  if (source_id < 1) throw std::invalid_argument("SourceState: source ids are 1-based");
  if (dim < 1) throw std::invalid_argument("SourceState: dim must be positive");
}

SourceState SourceState::from_parts(int source_id, std::vector<Observation> data,
                                    GPModel value_model, GPModel cost_model,
                                    SourceOptions options) {
  if (data.empty()) throw std::invalid_argument("SourceState::from_parts: empty dataset");
  SourceState s(source_id, static_cast<int>(data.front().location.size()), std::move(options));
  s.data_ = std::move(data);
  s.value_model_ = std::move(value_model);
  s.cost_model_ = std::move(cost_model);
  return s;
}

const GPModel& SourceState::value_model() const {
  if (!fitted()) throw std::logic_error("SourceState: no observations yet");
  return value_model_;
}

const GPModel& SourceState::cost_model() const {
  if (!fitted()) throw std::logic_error("SourceState: no observations yet");
  return cost_model_;
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> SourceState::function_data() const {
  Eigen::MatrixXd X(size(), dim_);
  Eigen::VectorXd y(size());
  for (int i = 0; i < size(); ++i) {
    X.row(i) = data_[i].location.transpose();
    y[i] = data_[i].value;
  }
  return {std::move(X), std::move(y)};
}

std::pair<Eigen::MatrixXd, Eigen::VectorXd> SourceState::cost_data() const {
  Eigen::MatrixXd X(size(), dim_);
  Eigen::VectorXd z(size());
  for (int i = 0; i < size(); ++i) {
    X.row(i) = data_[i].location.transpose();
    z[i] = data_[i].cost;
  }
  return {std::move(X), std::move(z)};
}

void SourceState::refit() {
  auto [X, y] = function_data();
  value_model_ = mle_fit(X, y, options_.fit);
  auto [Xc, z] = cost_data();
  if (options_.cost_log_transform) {
    cost_model_ = mle_fit(Xc, z.array().log().matrix(), options_.fit);
  } else {
    cost_model_ = mle_fit(Xc, z, options_.fit);
  }
}

void SourceState::add(const Observation& obs) {
  if (!(obs.cost > 0.0)) throw NonpositiveCost("observation cost must be positive");
  if (obs.location.size() != dim_) {
    throw std::invalid_argument("SourceState: observation dimension mismatch");
  }
  data_.push_back(obs);
  refit();
}

double SourceState::cost_mean(const Eigen::VectorXd& x) const {
  const Prediction p = cost_model().predict(x);
  return options_.cost_log_transform ? std::exp(p.mean) : p.mean;
}

double SourceState::cost_ucb(const Eigen::VectorXd& x) const {
  const Prediction p = cost_model().predict(x);
  const double sd = std::sqrt(p.variance);
  if (options_.cost_log_transform) {
    return std::exp(p.mean + sd);  // positive by construction; no clamp needed
  }
  return cost_ucb_value(p.mean, sd);
}

SourceState ingest(SourceState state, const Observation& obs) {
  state.add(obs);
  return state;
}

double discrepancy(const GPModel& model_a, const GPModel& model_b, const Eigen::VectorXd& x) {
  return std::abs(model_a.predict(x).mean - model_b.predict(x).mean);
}

double cost_ucb(const SourceState& state, const Eigen::VectorXd& x) { return state.cost_ucb(x); }

}  // namespace miso
