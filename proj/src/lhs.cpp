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

#include "miso/lhs.hpp"

#include <numeric>
#include <stdexcept>

#include "miso/rng.hpp"

namespace miso {

std::vector<Eigen::VectorXd> lhs_sample(int n, int dim, std::uint64_t seed) {
  if (n < 1 || dim < 1) {
    throw std::invalid_argument("lhs_sample: n and dim must be positive");
  }
  Rng rng(seed);
  std::vector<Eigen::VectorXd> points(n, Eigen::VectorXd(dim));
  std::vector<int> strata(n);
  for (int j = 0; j < dim; ++j) {
    std::iota(strata.begin(), strata.end(), 0);
    // Fisher-Yates; std::shuffle is implementation-defined.
    for (int i = n - 1; i > 0; --i) {
      const auto k = static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(i) + 1));
      std::swap(strata[i], strata[k]);
    }
    for (int i = 0; i < n; ++i) {
      points[i][j] = (static_cast<double>(strata[i]) + uniform01(rng)) / static_cast<double>(n);
    }
  }
  return points;
}

}  // namespace miso
