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

#ifndef MISO_NELDER_MEAD_HPP
#define MISO_NELDER_MEAD_HPP

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <vector>

namespace miso {

struct SimplexResult {
  Eigen::VectorXd x;
  double value = 0.0;
  int iterations = 0;
};

// Derivative-free simplex ascent on a box. Trial points are clamped into
// [lower, upper]; stops on iteration cap or when the simplex value spread
// collapses. Deterministic: no internal randomness.
SimplexResult nelder_mead_maximize(const std::function<double(const Eigen::VectorXd&)>& objective,
                                   const Eigen::VectorXd& start,
                                   const Eigen::VectorXd& lower,
                                   const Eigen::VectorXd& upper,
                                   int max_iters,
                                   double init_step = 0.05);

struct SearchOptions {
  int starts = 20;      // LHS starts, in addition to any explicit extras
  int max_iters = 100;  // per local search
  std::uint64_t seed = 0;
};

// Multi-start maximization over [0,1]^dim: `opts.starts` LHS starts plus the
// given extra starts, each refined by nelder_mead_maximize. Ties between
// starts go to the lexicographically smaller location, so the reduction is
// independent of evaluation order.
SimplexResult multistart_maximize(const std::function<double(const Eigen::VectorXd&)>& objective,
                                  int dim,
                                  const std::vector<Eigen::VectorXd>& extra_starts,
                                  const SearchOptions& opts);

// true when a is lexicographically smaller than b.
bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace miso

#endif  // MISO_NELDER_MEAD_HPP
