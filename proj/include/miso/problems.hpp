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

#ifndef MISO_PROBLEMS_HPP
#define MISO_PROBLEMS_HPP

#include <Eigen/Core>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "miso/rng.hpp"
#include "miso/search_space.hpp"
#include "miso/sources.hpp"

namespace miso {

struct SourceUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Noiseless closed forms of one source, on the raw (denormalized) space.
struct SourceFunctions {
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<double(const Eigen::VectorXd&)> cost;
};

struct GroundTruth {
  Eigen::VectorXd location;
  double value = 0.0;
};

// Synthetic multi-source benchmark: location-dependent values AND costs,
// with source 1 as the reference surface. Evaluators are pure given
// (location, rng state).
struct SyntheticProblem {
  SyntheticProblem(std::string name_, SearchSpace space_)
      : name(std::move(name_)), space(std::move(space_)) {}

  std::string name;
  SearchSpace space;
  std::vector<SourceFunctions> sources;  // index 0 is source 1
  std::vector<double> value_noise;       // per-source std of the value noise
  std::vector<double> cost_noise;        // per-source std of the cost noise,
                                         // relative to the noiseless cost
  GroundTruth ground_truth;              // for source 1
  // Failure injection for error-path tests: a query on (s, x) throws
  // SourceUnavailable when this returns true.
  std::function<bool(int source, const Eigen::VectorXd& x)> unavailable;

  int num_sources() const { return static_cast<int>(sources.size()); }
};

// 1-d two-source pair: a multimodal reference that is expensive to query
// near its optimum, and a cheap biased approximation.
SyntheticProblem forrester_pair(double value_noise = 0.01, double cost_noise = 0.01);

// 2-d three-source stress problem: Branin, a locally biased copy, and a
// constant-offset copy with degenerate constant cost.
SyntheticProblem branin_trio(double value_noise = 0.01, double cost_noise = 0.01);

std::vector<std::string> problem_names();
SyntheticProblem make_problem(const std::string& name);

// One coupled query of source s (1-based) at x in the raw space. The
// returned observation stores the normalized location and a cost floored at
// 0.01.
Observation evaluate(const SyntheticProblem& problem, int s, const Eigen::VectorXd& x, Rng& rng);

}  // namespace miso

#endif  // MISO_PROBLEMS_HPP
