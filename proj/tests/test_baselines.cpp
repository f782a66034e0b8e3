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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "miso/baselines.hpp"
#include "oracles.hpp"

using miso::Algorithm;
using miso::cooling_alpha;
using miso::CoolingState;
using miso::expected_improvement;
using miso::forrester_pair;
using miso::Rng;
using miso::RunConfig;
using miso::RunResult;
using miso::run_baseline;
using miso::SyntheticProblem;

namespace {

// Monte Carlo estimate of E[max(best - Y, 0)] under Y ~ N(mean, sd^2),
// with its standard error.
std::pair<double, double> ei_monte_carlo(double mean, double sd, double best, int draws,
                                         Rng& rng) {
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < draws; ++i) {
    const double y = mean + sd * miso::normal01(rng);
    const double imp = std::max(best - y, 0.0);
    sum += imp;
    sum_sq += imp * imp;
  }
  const double n = static_cast<double>(draws);
  const double estimate = sum / n;
  const double variance = std::max(0.0, sum_sq / n - estimate * estimate);
  return {estimate, std::sqrt(variance / n)};
}

}  // namespace

TEST_CASE("expected improvement endpoint values") {
  CHECK(expected_improvement(2.0, 0.0, 1.0) == 0.0);
  CHECK(expected_improvement(0.5, 0.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  // mean at the incumbent: EI = sd * phi(0)
  CHECK(expected_improvement(1.0, 1.0, 1.0) ==
        doctest::Approx(0.3989422804014327).epsilon(1e-12));
}

TEST_CASE("expected improvement agrees with Monte Carlo") {
  Rng rng(3);
  for (int trial = 0; trial < 4; ++trial) {
    const double mean = miso::normal01(rng);
    const double sd = 0.2 + miso::uniform01(rng);
    const double best = miso::normal01(rng);
    const auto [estimate, se] = ei_monte_carlo(mean, sd, best, 1000000, rng);
    const double ei = expected_improvement(mean, sd, best);
    CHECK(std::abs(ei - estimate) <= 3.0 * se + 1e-12);
  }
}

TEST_CASE("expected improvement is nonnegative and monotone in sd") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const double mean = miso::normal01(rng);
    const double best = mean + miso::uniform01(rng);  // mean < best
    double prev = expected_improvement(mean, 0.0, best);
    CHECK(prev >= 0.0);
    for (double sd = 0.1; sd <= 1.0; sd += 0.1) {
      const double ei = expected_improvement(mean, sd, best);
      CHECK(ei >= prev - 1e-12);
      prev = ei;
    }
  }
}

TEST_CASE("cooling factor endpoints and midpoint") {
  CHECK(cooling_alpha({100.0, 20.0, 20.0}) == 1.0);
  CHECK(cooling_alpha({100.0, 20.0, 100.0}) == 0.0);
  CHECK(cooling_alpha({100.0, 20.0, 60.0}) == 0.5);
  // clamped outside the budget window
  CHECK(cooling_alpha({100.0, 20.0, 150.0}) == 0.0);
  CHECK(cooling_alpha({100.0, 20.0, 10.0}) == 1.0);
  // degenerate budget counts as fully cooled
  CHECK(cooling_alpha({10.0, 20.0, 5.0}) == 0.0);
}

TEST_CASE("ei-cool interpolates between ei-pu and plain ei") {
  Rng rng(7);
  const Eigen::MatrixXd X = oracle::random_locations(6, 1, rng);
  Eigen::VectorXd y(6), z(6);
  for (int i = 0; i < 6; ++i) {
    y[i] = miso::normal01(rng);
    z[i] = 0.5 + 2.0 * miso::uniform01(rng);
  }
  const miso::GPModel value_model = miso::fit_gp(X, y, 1e-4, {1.0, 0.3});
  const miso::GPModel cost_model = miso::fit_gp(X, z, 1e-4, {1.0, 0.3});

  double best = y.minCoeff();
  for (int q = 0; q < 50; ++q) {
    const Eigen::VectorXd x = Eigen::VectorXd::Constant(1, miso::uniform01(rng));
    const auto p = value_model.predict(x);
    const double ei = expected_improvement(p.mean, std::sqrt(p.variance), best);
    const double cbar = std::max(cost_model.predict(x).mean, 1e-6);

    const CoolingState fresh{100.0, 10.0, 10.0};    // alpha = 1
    const CoolingState spent{100.0, 10.0, 100.0};   // alpha = 0
    const CoolingState half{100.0, 10.0, 55.0};     // alpha = 1/2
    CHECK(miso::ei_cool_value(x, value_model, cost_model, fresh) ==
          doctest::Approx(ei / cbar).epsilon(1e-12));
    CHECK(miso::ei_cool_value(x, value_model, cost_model, spent) ==
          doctest::Approx(ei).epsilon(1e-12));
    CHECK(miso::ei_cool_value(x, value_model, cost_model, half) ==
          doctest::Approx(ei / std::sqrt(cbar)).epsilon(1e-12));
  }
}

TEST_CASE("ei-cool worked example") {
  // EI = 0.4, cbar = 4, alpha = 0.5 -> 0.2
  CHECK(0.4 / std::pow(4.0, 0.5) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("ei and ei-pu coincide under constant unit costs") {
  SyntheticProblem p = forrester_pair(0.01, 0.0);
  for (auto& s : p.sources) {
    s.cost = [](const Eigen::VectorXd&) { return 1.0; };
  }
  RunConfig cfg;
  cfg.n_init_per_source = 4;
  cfg.max_evaluations = 6;
  cfg.seed = 3;
  cfg.algorithm = Algorithm::Ei;
  const RunResult ei = run_baseline(p, cfg);
  cfg.algorithm = Algorithm::EiPerUnitCost;
  const RunResult eipu = run_baseline(p, cfg);
  REQUIRE(ei.history.records.size() == eipu.history.records.size());
  for (std::size_t i = 0; i < ei.history.records.size(); ++i) {
    CHECK(ei.history.records[i].location == eipu.history.records[i].location);
    CHECK(ei.history.records[i].value == eipu.history.records[i].value);
  }
}

TEST_CASE("cooling exponent decays along an ei-cool run") {
  const SyntheticProblem p = forrester_pair();
  RunConfig cfg;
  cfg.n_init_per_source = 4;
  cfg.max_evaluations = 8;
  cfg.seed = 5;
  cfg.algorithm = Algorithm::EiCool;
  cfg.budget = 500.0;
  const RunResult r = run_baseline(p, cfg);

  // alpha recomputed from the logged cumulated costs is non-increasing
  const double tau = *cfg.budget;
  double tau_init = 0.0;
  for (const auto& rec : r.history.records) {
    if (rec.phase == miso::Phase::Init) tau_init = rec.cumulated_cost;
  }
  double prev_alpha = 1.0;
  for (const auto& rec : r.history.records) {
    if (rec.phase != miso::Phase::Optimize) continue;
    const double alpha = cooling_alpha({tau, tau_init, rec.cumulated_cost});
    CHECK(alpha <= prev_alpha + 1e-12);
    prev_alpha = alpha;
  }
  const double first = cooling_alpha({tau, tau_init, tau_init});
  CHECK(first == 1.0);
  CHECK(prev_alpha < first);
}

TEST_CASE("ei-cool requires a budget") {
  const SyntheticProblem p = forrester_pair();
  RunConfig cfg;
  cfg.algorithm = Algorithm::EiCool;
  CHECK_THROWS_AS(run_baseline(p, cfg), std::invalid_argument);
}

TEST_CASE("baseline history is single-source with exact accounting") {
  const SyntheticProblem p = forrester_pair();
  RunConfig cfg;
  cfg.n_init_per_source = 3;
  cfg.max_evaluations = 5;
  cfg.seed = 11;
  cfg.algorithm = Algorithm::Ei;
  const RunResult r = run_baseline(p, cfg);
  CHECK(r.history.records.size() == 8);
  double total = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const auto& rec : r.history.records) {
    CHECK(rec.source_id == 1);
    CHECK_FALSE(rec.corrected);
    total += rec.cost;
    best = std::min(best, rec.value);
    CHECK(rec.cumulated_cost == doctest::Approx(total).epsilon(1e-12));
    CHECK(rec.incumbent_value == doctest::Approx(best).epsilon(1e-12));
  }
  CHECK(r.total_cost == doctest::Approx(total).epsilon(1e-12));
  CHECK(r.best_value == doctest::Approx(best).epsilon(1e-12));
  CHECK(r.evaluations_per_source[0] == 8);
  CHECK(r.evaluations_per_source[1] == 0);
}

TEST_CASE("single-source runs on forrester converge" * doctest::timeout(180)) {
  const SyntheticProblem p = forrester_pair();
  std::vector<double> bests;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RunConfig cfg;
    cfg.seed = seed;
    cfg.algorithm = Algorithm::Ei;
    const RunResult r = run_baseline(p, cfg);
    bests.push_back(r.best_value);
  }
  CHECK(std::abs(oracle::median(bests) - (-6.0207400557670825)) <= 0.1);
}
