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

#include "miso/agp.hpp"

#include <cmath>
#include <stdexcept>

namespace miso {

std::vector<InducingPoint> inducing_points(const SourceState& source) {
  std::vector<InducingPoint> out;
  out.reserve(source.data().size());
  for (const auto& obs : source.data()) {
    out.push_back(InducingPoint{obs.location, obs.value, source.source_id()});
  }
  return out;
}

std::vector<InducingPoint> build_augmenting_set(const std::vector<SourceState>& sources,
                                                double m) {
  if (sources.empty() || !sources.front().fitted()) {
    throw std::invalid_argument("build_augmenting_set: source 1 must be fitted");
  }
  if (m < 0.0) throw std::invalid_argument("build_augmenting_set: m must be nonnegative");

  const GPModel& f1 = sources.front().value_model();
  std::vector<InducingPoint> augmenting;
  for (std::size_t s = 1; s < sources.size(); ++s) {
    if (!sources[s].fitted()) continue;
    const GPModel& fs = sources[s].value_model();
    for (const auto& obs : sources[s].data()) {
      const Prediction p1 = f1.predict(obs.location);
      const double eta = std::abs(fs.predict(obs.location).mean - p1.mean);
      if (eta < m * std::sqrt(p1.variance)) {
        augmenting.push_back(InducingPoint{obs.location, obs.value, sources[s].source_id()});
      }
    }
  }
  return augmenting;
}

AugmentedModel fit_augmented(const std::vector<InducingPoint>& f1_pairs,
                             const std::vector<InducingPoint>& augmenting, double m,
                             const FitOptions& fit) {
  if (f1_pairs.empty()) {
    throw std::invalid_argument("fit_augmented: source-1 pairs must be non-empty");
  }

  AugmentedModel agp;
  agp.m = m;
  agp.inducing = f1_pairs;
  agp.inducing.insert(agp.inducing.end(), augmenting.begin(), augmenting.end());

  const int n = agp.size();
  const int d = static_cast<int>(agp.inducing.front().location.size());
  Eigen::MatrixXd X(n, d);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    X.row(i) = agp.inducing[i].location.transpose();
    y[i] = agp.inducing[i].value;
  }

  FitOptions agp_fit = fit;
  agp_fit.learn_noise = true;
  agp.model = mle_fit(X, y, agp_fit);

  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (agp.inducing[i].value < agp.inducing[best].value) best = i;
  }
  agp.incumbent_value = agp.inducing[best].value;
  agp.incumbent_location = agp.inducing[best].location;
  agp.incumbent_source = agp.inducing[best].source_id;
  return agp;
}

AugmentedModel build_agp(const std::vector<SourceState>& sources, double m,
                         const FitOptions& fit) {
  if (sources.empty() || !sources.front().fitted()) {
    throw std::invalid_argument("build_agp: source 1 must be fitted");
  }
  return fit_augmented(inducing_points(sources.front()), build_augmenting_set(sources, m), m,
                       fit);
}

}  // namespace miso
