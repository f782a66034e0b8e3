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

#include "miso/problems.hpp"

#include <cmath>

namespace miso {

namespace {

double forrester(double x) {
  const double a = 6.0 * x - 2.0;
  return a * a * std::sin(12.0 * x - 4.0);
}

double branin(double x1, double x2) {
  constexpr double pi = 3.14159265358979323846;
  const double b = 5.1 / (4.0 * pi * pi);
  const double c = 5.0 / pi;
  const double t = 1.0 / (8.0 * pi);
  const double u = x2 - b * x1 * x1 + c * x1 - 6.0;
  return u * u + 10.0 * (1.0 - t) * std::cos(x1) + 10.0;
}

}  // namespace

SyntheticProblem forrester_pair(double value_noise, double cost_noise) {
  SyntheticProblem p("forrester2", SearchSpace::unit(1));
  auto f1 = [](const Eigen::VectorXd& x) { return forrester(x[0]); };
  auto f2 = [](const Eigen::VectorXd& x) {
    return 0.5 * forrester(x[0]) + 10.0 * (x[0] - 0.5) - 5.0;
  };
  // Source 1 is expensive precisely around the optimum; source 2 is cheap
  // everywhere with a mild location dependence.
  auto c1 = [](const Eigen::VectorXd& x) {
    const double d = x[0] - 0.757;
    return 1.0 + 9.0 * std::exp(-d * d / 0.02);
  };
  auto c2 = [](const Eigen::VectorXd& x) { return 0.1 + 0.4 * x[0]; };
  p.sources = {{f1, c1}, {f2, c2}};
  p.value_noise = {value_noise, value_noise};
  p.cost_noise = {cost_noise, cost_noise};
  p.ground_truth.location = Eigen::VectorXd::Constant(1, 0.7572487569347571);
  p.ground_truth.value = -6.0207400557670825;
  return p;
}

SyntheticProblem branin_trio(double value_noise, double cost_noise) {
  Eigen::VectorXd lower(2), upper(2);
  lower << -5.0, 0.0;
  upper << 10.0, 15.0;
  SyntheticProblem p("branin3", SearchSpace(lower, upper));
  auto f1 = [](const Eigen::VectorXd& x) { return branin(x[0], x[1]); };
  auto f2 = [](const Eigen::VectorXd& x) {
    return branin(x[0], x[1]) + 2.0 * std::sin(x[0]) * std::sin(x[1]);
  };
  auto f3 = [](const Eigen::VectorXd& x) { return branin(x[0], x[1]) + 10.0; };
  auto c1 = [](const Eigen::VectorXd& x) { return 5.0 + x[0] * x[0] / 10.0; };
  auto c2 = [](const Eigen::VectorXd& x) { return 1.0 + std::abs(x[1]) / 5.0; };
  auto c3 = [](const Eigen::VectorXd&) { return 0.2; };
  p.sources = {{f1, c1}, {f2, c2}, {f3, c3}};
  p.value_noise = {value_noise, value_noise, value_noise};
  p.cost_noise = {cost_noise, cost_noise, cost_noise};
  p.ground_truth.location = Eigen::VectorXd(2);
  p.ground_truth.location << 3.14159265358979323846, 2.275;
  p.ground_truth.value = 0.3978873577297382;
  return p;
}

std::vector<std::string> problem_names() { return {"forrester2", "branin3"}; }

SyntheticProblem make_problem(const std::string& name) {
  if (name == "forrester2") return forrester_pair();
  if (name == "branin3") return branin_trio();
  throw std::invalid_argument("unknown problem: " + name);
}

Observation evaluate(const SyntheticProblem& problem, int s, const Eigen::VectorXd& x, Rng& rng) {
  if (s < 1 || s > problem.num_sources()) {
    throw std::invalid_argument("evaluate: source id out of range");
  }
  if (problem.unavailable && problem.unavailable(s, x)) {
    throw SourceUnavailable("source " + std::to_string(s) + " unavailable");
  }
  const auto& src = problem.sources[static_cast<std::size_t>(s - 1)];
  const double value = src.value(x);
  const double cost = src.cost(x);
  // Fixed draw order (value first, then cost) keeps runs reproducible.
  const double value_eps = problem.value_noise[static_cast<std::size_t>(s - 1)] * normal01(rng);
  const double cost_eps = problem.cost_noise[static_cast<std::size_t>(s - 1)] * cost * normal01(rng);
  Observation obs;
  obs.location = problem.space.normalize(x);
  obs.value = value + value_eps;
  obs.cost = std::max(cost + cost_eps, 0.01);
  return obs;
}

}  // namespace miso
