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

#ifndef MISO_OPTIMIZER_HPP
#define MISO_OPTIMIZER_HPP

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "miso/agp.hpp"
#include "miso/lhs.hpp"
#include "miso/problems.hpp"

namespace miso {

enum class Algorithm { MisoWild, Ei, EiPerUnitCost, EiCool };

std::string to_string(Algorithm algorithm);
Algorithm algorithm_from_string(const std::string& name);
std::vector<std::string> algorithm_names();

enum class CostScaling { None, MeanInit };

struct RunConfig {
  int n_init_per_source = 5;
  int max_evaluations = 50;  // post-initialization queries
  double m = 1.0;
  // Duplicate radius in normalized space; defaults to 1e-3 * sqrt(d).
  std::optional<double> delta_min;
  std::uint64_t seed = 1;
  std::optional<double> budget;  // cumulated-cost cap
  Algorithm algorithm = Algorithm::MisoWild;
  double delta_conf = 0.1;  // confidence level of the beta schedule
  bool cost_log_transform = false;
  CostScaling cost_scaling = CostScaling::None;

  // Strict invariants, enforced at the experiment-config boundary. The run
  // functions themselves tolerate max_evaluations = 0 (initial design only).
  void validate() const;
  double resolved_delta_min(int dim) const;
};

enum class Phase { Init, Optimize, FinalEval };

std::string to_string(Phase phase);

struct HistoryRecord {
  int iteration = 0;
  Phase phase = Phase::Init;
  int source_id = 0;
  Eigen::VectorXd location;  // denormalized
  double value = 0.0;
  double cost = 0.0;
  double cumulated_cost = 0.0;
  double incumbent_value = 0.0;
  bool corrected = false;
};

struct RunHistory {
  std::vector<HistoryRecord> records;

  double total_cost() const {
    return records.empty() ? 0.0 : records.back().cumulated_cost;
  }
};

struct RunResult {
  Eigen::VectorXd best_location;  // denormalized
  double best_value = 0.0;
  double total_cost = 0.0;
  RunHistory history;
  std::vector<int> evaluations_per_source;
};

// A failed source query aborts the run; the partial history travels with the
// error so cost accounting stays auditable.
struct RunAborted : std::runtime_error {
  RunAborted(const std::string& what, RunHistory partial)
      : std::runtime_error(what), history(std::move(partial)) {}
  RunHistory history;
};

// The full outer loop: LHS initialization on every source, then iterate
// model refits, AGP rebuild, acquisition, correction and query until the
// evaluation cap (or the pessimistic budget check) stops it, and finally
// extract the solution, re-evaluating on source 1 when the incumbent came
// from elsewhere.
RunResult run_miso_wild(const SyntheticProblem& problem, const RunConfig& config);

struct FinalSolution {
  Eigen::VectorXd location;  // normalized
  double value = 0.0;
  double extra_cost = 0.0;   // cost of the confirmation query, if any
  int source_id = 1;         // provenance of the reported value
};

// Incumbent extraction: returns (x+, y+) from the AGP; when x+ was observed
// on a source other than 1, performs one confirming f_1 query and reports
// that value instead.
FinalSolution final_solution(const AugmentedModel& agp, const std::vector<SourceState>& sources,
                             const SyntheticProblem& problem, Rng& rng);

}  // namespace miso

#endif  // MISO_OPTIMIZER_HPP
