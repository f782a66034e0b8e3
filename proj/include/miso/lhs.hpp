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

#ifndef MISO_LHS_HPP
#define MISO_LHS_HPP

#include <Eigen/Core>
#include <cstdint>
#include <vector>

namespace miso {

// Latin hypercube design of n points in [0,1)^dim. Per dimension, the n
// samples occupy the n strata [k/n, (k+1)/n) exactly once, with uniform
// jitter inside each stratum. Deterministic per seed.
std::vector<Eigen::VectorXd> lhs_sample(int n, int dim, std::uint64_t seed);

}  // namespace miso

#endif  // MISO_LHS_HPP
