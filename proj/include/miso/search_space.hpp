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

#ifndef MISO_SEARCH_SPACE_HPP
#define MISO_SEARCH_SPACE_HPP

#include <Eigen/Core>

namespace miso {

// Box-bounded search domain. All model and search code operates on the unit
// hypercube; normalize/denormalize map between the box and [0,1]^d.
class SearchSpace {
 public:
  SearchSpace(Eigen::VectorXd lower, Eigen::VectorXd upper);

  static SearchSpace unit(int dim);

  int dim() const { return static_cast<int>(lower_.size()); }
  const Eigen::VectorXd& lower() const { return lower_; }
  const Eigen::VectorXd& upper() const { return upper_; }

  Eigen::VectorXd normalize(const Eigen::VectorXd& x) const;
  Eigen::VectorXd denormalize(const Eigen::VectorXd& u) const;

 private:
  Eigen::VectorXd lower_;
  Eigen::VectorXd upper_;
};

}  // namespace miso

#endif  // MISO_SEARCH_SPACE_HPP
