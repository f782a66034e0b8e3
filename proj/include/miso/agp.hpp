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

#ifndef MISO_AGP_HPP
#define MISO_AGP_HPP

#include <Eigen/Core>
#include <vector>

#include "miso/sources.hpp"

namespace miso {

struct InducingPoint {
  Eigen::VectorXd location;  // normalized
  double value = 0.0;
  int source_id = 0;  // provenance
};

// Single GP over the inducing set: all of source 1's evaluations plus the
// low-discrepancy observations borrowed from the other sources.
struct AugmentedModel {
  std::vector<InducingPoint> inducing;  // source-1 pairs first, then augmenting
  double m = 1.0;
  GPModel model;
  double incumbent_value = 0.0;
  Eigen::VectorXd incumbent_location;
  int incumbent_source = 1;

  int size() const { return static_cast<int>(inducing.size()); }
};

// Candidates from sources 2..S whose value-model mean stays within m
// posterior standard deviations of the source-1 model at their own location:
// |mu_s(x) - mu_1(x)| < m * sigma_1(x), strictly. Output order is
// (source id, ingestion index).
std::vector<InducingPoint> build_augmenting_set(const std::vector<SourceState>& sources,
                                                double m);

// Fits the augmented GP on the union of source-1 pairs and the augmenting
// set. Noise is always learned here: augmenting points carry cross-source
// bias that a fixed small noise cannot absorb. The incumbent is the lowest
// inducing value; ties keep the earliest entry.
AugmentedModel fit_augmented(const std::vector<InducingPoint>& f1_pairs,
                             const std::vector<InducingPoint>& augmenting, double m,
                             const FitOptions& fit = {});

// build_augmenting_set + fit_augmented against the live source states.
AugmentedModel build_agp(const std::vector<SourceState>& sources, double m,
                         const FitOptions& fit = {});

// Source dataset as inducing points (the F_s projection with provenance).
std::vector<InducingPoint> inducing_points(const SourceState& source);

}  // namespace miso

#endif  // MISO_AGP_HPP
