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

#include "miso/search_space.hpp"

#include <stdexcept>

namespace miso {

SearchSpace::SearchSpace(Eigen::VectorXd lower, Eigen::VectorXd upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.size() == 0 || lower_.size() != upper_.size()) {
    throw std::invalid_argument("SearchSpace: bounds must be non-empty and of equal size");
  }
  for (Eigen::Index i = 0; i < lower_.size(); ++i) {
    if (!(upper_[i] > lower_[i])) {
      throw std::invalid_argument("SearchSpace: upper bound must exceed lower bound");
    }
  }
}

SearchSpace SearchSpace::unit(int dim) {
  return SearchSpace(Eigen::VectorXd::Zero(dim), Eigen::VectorXd::Ones(dim));
}

Eigen::VectorXd SearchSpace::normalize(const Eigen::VectorXd& x) const {
  return (x - lower_).cwiseQuotient(upper_ - lower_);
}

Eigen::VectorXd SearchSpace::denormalize(const Eigen::VectorXd& u) const {
  return lower_ + u.cwiseProduct(upper_ - lower_);
}

}  // namespace miso
