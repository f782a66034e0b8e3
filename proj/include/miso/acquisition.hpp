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

#ifndef MISO_ACQUISITION_HPP
#define MISO_ACQUISITION_HPP

#include <Eigen/Core>
#include <vector>

#include "miso/agp.hpp"
#include "miso/nelder_mead.hpp"
#include "miso/sources.hpp"

namespace miso {

// Non-owning snapshot of the models an acquisition evaluation reads. All
// referenced state is immutable during a search, so per-source searches may
// run concurrently.
struct AcquisitionContext {
  const AugmentedModel* agp = nullptr;
  const std::vector<SourceState>* sources = nullptr;
  double beta = 1.0;       // confidence-bound multiplier for this iteration
  double delta_min = 0.0;  // duplicate radius, normalized space
  int iteration = 1;
  // Optional per-source divisors applied to the pessimistic cost estimate
  // (empty: no scaling).
  std::vector<double> cost_scale;
};

struct Candidate {
  int source_id = 0;
  Eigen::VectorXd location;  // normalized
  double value = 0.0;
  bool corrected = false;
};

// Cost- and discrepancy-penalized optimistic improvement:
// (incumbent - (mean - sqrt(beta) sd)) / (1 + cost_ucb * discrepancy).
double acquisition_score(double incumbent, double mean, double sd, double beta, double cost_ucb,
                         double discrepancy);

// acquisition_score at (source s, location x) under the context's models.
double acquisition_value(const AcquisitionContext& ctx, int source_id,
                         const Eigen::VectorXd& x);

// Confidence-bound schedule beta^t = 2 log(d t^2 pi^2 / (6 delta_conf));
// strictly increasing in t.
double beta_schedule(int t, int dim, double delta_conf = 0.1);

// Maximizes the acquisition over sources x locations: per-source multi-start
// simplex search (LHS starts plus the incumbent location), then a
// deterministic reduction. Ties break toward the lower source index, then
// the lexicographically smaller location.
Candidate select_next(const AcquisitionContext& ctx, const SearchOptions& search = {});

// Duplicate-proposal fallback: when the chosen location lands within
// delta_min of a previous query on the chosen source, redirect the budget to
// exploration on source 1 at the point of highest posterior standard
// deviation. Applied at most once per iteration.
Candidate apply_correction(const Candidate& cand, const std::vector<SourceState>& sources,
                           const AugmentedModel& agp, double delta_min,
                           const SearchOptions& search = {});

}  // namespace miso

#endif  // MISO_ACQUISITION_HPP
