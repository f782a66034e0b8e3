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

#include "miso/acquisition.hpp"
#include "oracles.hpp"

using miso::acquisition_score;
using miso::acquisition_value;
using miso::AcquisitionContext;
using miso::apply_correction;
using miso::AugmentedModel;
using miso::beta_schedule;
using miso::Candidate;
using miso::fit_gp;
using miso::Observation;
using miso::Rng;
using miso::select_next;
using miso::SourceState;

namespace {

Observation obs_at(double x, double value, double cost = 1.0) {
  Observation o;
  o.location = Eigen::VectorXd::Constant(1, x);
  o.value = value;
  o.cost = cost;
  return o;
}

SourceState crafted_state(int id, const std::vector<Observation>& data,
                          const miso::KernelParams& k, double noise) {
  const int n = static_cast<int>(data.size());
  Eigen::MatrixXd X(n, 1);
  Eigen::VectorXd y(n), z(n);
  for (int i = 0; i < n; ++i) {
    X.row(i) = data[static_cast<std::size_t>(i)].location.transpose();
    y[i] = data[static_cast<std::size_t>(i)].value;
    z[i] = data[static_cast<std::size_t>(i)].cost;
  }
  return SourceState::from_parts(id, data, fit_gp(X, y, noise, k), fit_gp(X, z, noise, k));
}

// A state whose cost surrogate is a controlled stub trained on constant -1
// targets: its UCB clamps to zero everywhere (mean -1, sd <= 1).
SourceState zero_cost_state(int id, const std::vector<Observation>& data,
                            const miso::KernelParams& k, double noise) {
  const int n = static_cast<int>(data.size());
  Eigen::MatrixXd X(n, 1);
  Eigen::VectorXd y(n);
  for (int i = 0; i < n; ++i) {
    X.row(i) = data[static_cast<std::size_t>(i)].location.transpose();
    y[i] = data[static_cast<std::size_t>(i)].value;
  }
  const Eigen::VectorXd neg = Eigen::VectorXd::Constant(n, -1.0);
  return SourceState::from_parts(id, data, fit_gp(X, y, noise, k),
                                 fit_gp(X, neg, 0.0, {1.0, k.lengthscale}));
}

std::vector<Observation> random_observations(int n, double spread, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Observation> data;
  for (int i = 0; i < n; ++i) {
    data.push_back(obs_at(miso::uniform01(rng), spread * miso::normal01(rng),
                          0.5 + 2.0 * miso::uniform01(rng)));
  }
  return data;
}

struct GridBest {
  int source = 0;
  double x = 0.0;
  double value = 0.0;
};

// Exhaustive enumeration over sources x a uniform 1-d grid, with the same
// tie-break rules (lower source, then smaller x).
GridBest grid_select(const AcquisitionContext& ctx, int n_sources, int points) {
  GridBest best{0, 0.0, -std::numeric_limits<double>::infinity()};
  for (int s = 1; s <= n_sources; ++s) {
    for (int i = 0; i < points; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(points - 1);
      const double v = acquisition_value(ctx, s, Eigen::VectorXd::Constant(1, x));
      if (v > best.value) best = GridBest{s, x, v};
    }
  }
  return best;
}

}  // namespace

TEST_CASE("acquisition score arithmetic") {
  // y+ = 1, mu = 0.5, sd = 0.2, beta = 4, cost = 2, eta = 0.25
  CHECK(acquisition_score(1.0, 0.5, 0.2, 4.0, 2.0, 0.25) == doctest::Approx(0.6).epsilon(1e-12));
  // clamped cost: denominator is 1 whatever the discrepancy
  CHECK(acquisition_score(1.0, 0.5, 0.2, 4.0, 0.0, 123.0) ==
        doctest::Approx(1.0 - 0.5 + 2.0 * 0.2).epsilon(1e-12));
  // zero discrepancy: denominator is 1 whatever the cost
  CHECK(acquisition_score(1.0, 0.5, 0.2, 4.0, 1e9, 0.0) ==
        doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("acquisition score is bounded by its numerator") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const double inc = miso::normal01(rng);
    const double mean = miso::normal01(rng);
    const double sd = miso::uniform01(rng);
    const double beta = 4.0 * miso::uniform01(rng);
    const double cost = 5.0 * miso::uniform01(rng);
    const double eta = 2.0 * miso::uniform01(rng);
    const double numerator = inc - (mean - std::sqrt(beta) * sd);
    const double v = acquisition_score(inc, mean, sd, beta, cost, eta);
    if (numerator >= 0.0) {
      CHECK(v <= numerator + 1e-12);
    } else {
      CHECK(v >= numerator - 1e-12);
    }
    if (cost * eta == 0.0) CHECK(v == doctest::Approx(numerator).epsilon(1e-12));
  }
}

TEST_CASE("acquisition score is non-increasing in cost and discrepancy") {
  for (double base_cost : {0.0, 0.5, 2.0}) {
    for (double base_eta : {0.0, 0.3, 1.5}) {
      const double v = acquisition_score(1.0, 0.2, 0.1, 1.0, base_cost, base_eta);
      CHECK(acquisition_score(1.0, 0.2, 0.1, 1.0, base_cost + 0.5, base_eta) <= v + 1e-12);
      CHECK(acquisition_score(1.0, 0.2, 0.1, 1.0, base_cost, base_eta + 0.5) <= v + 1e-12);
    }
  }
}

TEST_CASE("beta schedule values and monotonicity") {
  constexpr double pi2_over_6 = 9.8696044010893586188 / 6.0;
  CHECK(beta_schedule(1, 1, pi2_over_6) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(beta_schedule(10, 2, 0.1) == doctest::Approx(16.197205524025655).epsilon(1e-9));
  for (int t = 1; t < 100; ++t) {
    CHECK(beta_schedule(t + 1, 3, 0.1) > beta_schedule(t, 3, 0.1));
  }
  CHECK_THROWS_AS(beta_schedule(0, 1, 0.1), std::invalid_argument);
}

TEST_CASE("zero cost reduces selection to the confidence-bound maximizer") {
  std::vector<SourceState> sources = {
      zero_cost_state(1, random_observations(6, 1.0, 41), {1.0, 0.2}, 1e-4)};
  const AugmentedModel agp = build_agp(sources, 1.0, {.seed = 5});

  AcquisitionContext ctx;
  ctx.agp = &agp;
  ctx.sources = &sources;
  ctx.beta = 2.5;
  ctx.delta_min = 0.0;
  ctx.iteration = 1;

  const Candidate cand = select_next(ctx, {.starts = 20, .max_iters = 100, .seed = 9});
  CHECK(cand.source_id == 1);

  // exact zero-cost clamp: the value must equal the plain optimistic
  // improvement at the returned point
  const auto p = agp.model.predict(cand.location);
  CHECK(cand.value == doctest::Approx(agp.incumbent_value -
                                      (p.mean - std::sqrt(2.5) * std::sqrt(p.variance)))
                          .epsilon(1e-12));

  const GridBest grid = grid_select(ctx, 1, 2001);
  CHECK(std::abs(cand.location[0] - grid.x) <= 1e-3);
}

TEST_CASE("two-source selection matches exhaustive enumeration") {
  for (std::uint64_t seed = 200; seed < 205; ++seed) {
    std::vector<SourceState> sources = {
        crafted_state(1, random_observations(6, 1.0, seed), {1.0, 0.25}, 1e-4),
        crafted_state(2, random_observations(5, 1.0, seed + 50), {0.8, 0.3}, 1e-4)};
    const AugmentedModel agp = build_agp(sources, 1.0, {.seed = 6});

    AcquisitionContext ctx;
    ctx.agp = &agp;
    ctx.sources = &sources;
    ctx.beta = beta_schedule(3, 1, 0.1);
    ctx.delta_min = 0.0;
    ctx.iteration = 3;

    const Candidate cand = select_next(ctx, {.starts = 20, .max_iters = 100, .seed = 1});
    const GridBest grid = grid_select(ctx, 2, 2001);
    CHECK(cand.source_id == grid.source);
    CHECK(std::abs(cand.location[0] - grid.x) <= 1e-3);
    CHECK(cand.value >= grid.value - 1e-9);
  }
}

TEST_CASE("identical sources tie-break to source 1") {
  const auto data = random_observations(6, 1.0, 77);
  std::vector<SourceState> sources = {crafted_state(1, data, {1.0, 0.25}, 1e-4),
                                      crafted_state(2, data, {1.0, 0.25}, 1e-4),
                                      crafted_state(3, data, {1.0, 0.25}, 1e-4)};
  const AugmentedModel agp = build_agp(sources, 1e6, {.seed = 4});
  AcquisitionContext ctx;
  ctx.agp = &agp;
  ctx.sources = &sources;
  ctx.beta = 4.0;
  ctx.delta_min = 0.0;
  ctx.iteration = 1;
  CHECK(select_next(ctx, {.seed = 2}).source_id == 1);
}

TEST_CASE("selection is deterministic given context and seed") {
  std::vector<SourceState> sources = {
      crafted_state(1, random_observations(6, 1.0, 88), {1.0, 0.25}, 1e-4),
      crafted_state(2, random_observations(6, 1.0, 89), {1.0, 0.25}, 1e-4)};
  const AugmentedModel agp = build_agp(sources, 1.0, {.seed = 3});
  AcquisitionContext ctx;
  ctx.agp = &agp;
  ctx.sources = &sources;
  ctx.beta = 3.0;
  ctx.delta_min = 0.0;
  ctx.iteration = 2;
  const Candidate a = select_next(ctx, {.seed = 11});
  const Candidate b = select_next(ctx, {.seed = 11});
  CHECK(a.source_id == b.source_id);
  CHECK(a.location == b.location);
  CHECK(a.value == b.value);
}

TEST_CASE("correction leaves distant candidates untouched") {
  std::vector<SourceState> sources = {
      crafted_state(1, {obs_at(0.1, 1.0), obs_at(0.9, 0.0)}, {1.0, 0.2}, 1e-6)};
  const AugmentedModel agp = build_agp(sources, 1.0, {.seed = 8});
  Candidate cand;
  cand.source_id = 1;
  cand.location = Eigen::VectorXd::Constant(1, 0.5);
  cand.value = 1.0;

  const Candidate out = apply_correction(cand, sources, agp, 1e-3, {.seed = 12});
  CHECK_FALSE(out.corrected);
  CHECK(out.location == cand.location);

  // delta = 0 never triggers, even exactly on a previous query
  Candidate on_top = cand;
  on_top.location = Eigen::VectorXd::Constant(1, 0.1);
  const Candidate out2 = apply_correction(on_top, sources, agp, 0.0, {.seed = 12});
  CHECK_FALSE(out2.corrected);
}

TEST_CASE("a near-duplicate proposal is redirected to maximal source-1 uncertainty") {
  std::vector<SourceState> sources = {
      crafted_state(1, {obs_at(0.05, 1.0), obs_at(0.3, 0.5), obs_at(0.95, -0.2)}, {1.0, 0.15},
                    1e-6),
      crafted_state(2, {obs_at(0.2, 0.8), obs_at(0.7, 0.1)}, {1.0, 0.2}, 1e-6),
      crafted_state(3, {obs_at(0.5, 0.4), obs_at(0.8, 0.3)}, {1.0, 0.2}, 1e-6)};
  const AugmentedModel agp = build_agp(sources, 1.0, {.seed = 10});

  const double delta = 1e-2;
  Candidate cand;
  cand.source_id = 3;
  cand.location = Eigen::VectorXd::Constant(1, 0.5 + delta / 2.0);
  cand.value = 2.0;

  const Candidate out = apply_correction(cand, sources, agp, delta, {.seed = 13});
  CHECK(out.corrected);
  CHECK(out.source_id == 1);

  const auto sigma1 = [&](double x) {
    return std::sqrt(sources.front().value_model().predict(Eigen::VectorXd::Constant(1, x)).variance);
  };
  const auto grid = oracle::grid_argmax_1d(sigma1, 2001);
  CHECK(std::abs(out.location[0] - grid.x) <= 1e-3);
}

TEST_CASE("corrected candidates always point at source 1") {
  // candidate within delta of its own source's data
  std::vector<SourceState> sources = {
      crafted_state(1, {obs_at(0.1, 1.0), obs_at(0.6, 0.2)}, {1.0, 0.2}, 1e-6),
      crafted_state(2, {obs_at(0.4, 0.9), obs_at(0.75, 0.0)}, {1.0, 0.2}, 1e-6)};
  const AugmentedModel agp = build_agp(sources, 1.0, {.seed = 14});
  Candidate cand;
  cand.source_id = 2;
  cand.location = Eigen::VectorXd::Constant(1, 0.4000001);
  cand.value = 1.0;
  const Candidate out = apply_correction(cand, sources, agp, 1e-3, {.seed = 15});
  CHECK(out.corrected);
  CHECK(out.source_id == 1);
}
