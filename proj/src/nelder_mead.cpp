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

#include "miso/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "miso/lhs.hpp"

namespace miso {

bool lex_less(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

namespace {

Eigen::VectorXd clamp_box(Eigen::VectorXd x, const Eigen::VectorXd& lower,
                          const Eigen::VectorXd& upper) {
  return x.cwiseMax(lower).cwiseMin(upper);
}

}  // namespace

SimplexResult nelder_mead_maximize(const std::function<double(const Eigen::VectorXd&)>& objective,
                                   const Eigen::VectorXd& start,
                                   const Eigen::VectorXd& lower,
                                   const Eigen::VectorXd& upper,
                                   int max_iters,
                                   double init_step) {
  const int d = static_cast<int>(start.size());
  if (d < 1) throw std::invalid_argument("nelder_mead_maximize: empty start point");

  // Internally minimizes -objective with the standard coefficients.
  const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
  auto f = [&](const Eigen::VectorXd& x) { return -objective(x); };

  std::vector<Eigen::VectorXd> verts(d + 1);
  std::vector<double> fv(d + 1);
  verts[0] = clamp_box(start, lower, upper);
  for (int i = 0; i < d; ++i) {
    Eigen::VectorXd v = verts[0];
    const double span = upper[i] - lower[i];
    double step = init_step * span;
    if (v[i] + step > upper[i]) step = -step;
    v[i] += step;
    verts[i + 1] = clamp_box(std::move(v), lower, upper);
  }
  for (int i = 0; i <= d; ++i) fv[i] = f(verts[i]);

  std::vector<int> order(d + 1);
  int iter = 0;
  for (; iter < max_iters; ++iter) {
    for (int i = 0; i <= d; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
    {
      std::vector<Eigen::VectorXd> v2(d + 1);
      std::vector<double> f2(d + 1);
      for (int i = 0; i <= d; ++i) {
        v2[i] = verts[order[i]];
        f2[i] = fv[order[i]];
      }
      verts.swap(v2);
      fv.swap(f2);
    }

    if (std::abs(fv[d] - fv[0]) <= 1e-12 * (1.0 + std::abs(fv[0]))) break;

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
    for (int i = 0; i < d; ++i) centroid += verts[i];
    centroid /= static_cast<double>(d);

    const Eigen::VectorXd reflected =
        clamp_box(centroid + alpha * (centroid - verts[d]), lower, upper);
    const double fr = f(reflected);

    if (fr < fv[0]) {
      const Eigen::VectorXd expanded =
          clamp_box(centroid + gamma * (reflected - centroid), lower, upper);
      const double fe = f(expanded);
      if (fe < fr) {
        verts[d] = expanded;
        fv[d] = fe;
      } else {
        verts[d] = reflected;
        fv[d] = fr;
      }
    } else if (fr < fv[d - 1]) {
      verts[d] = reflected;
      fv[d] = fr;
    } else {
      const bool outside = fr < fv[d];
      const Eigen::VectorXd contracted = clamp_box(
          outside ? centroid + rho * (reflected - centroid) : centroid + rho * (verts[d] - centroid),
          lower, upper);
      const double fc = f(contracted);
      if (fc < (outside ? fr : fv[d])) {
        verts[d] = contracted;
        fv[d] = fc;
      } else {
        for (int i = 1; i <= d; ++i) {
          verts[i] = clamp_box(verts[0] + sigma * (verts[i] - verts[0]), lower, upper);
          fv[i] = f(verts[i]);
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i <= d; ++i) {
    if (fv[i] < fv[best]) best = i;
  }
  return SimplexResult{verts[best], -fv[best], iter};
}

SimplexResult multistart_maximize(const std::function<double(const Eigen::VectorXd&)>& objective,
                                  int dim,
                                  const std::vector<Eigen::VectorXd>& extra_starts,
                                  const SearchOptions& opts) {
  const Eigen::VectorXd lower = Eigen::VectorXd::Zero(dim);
  const Eigen::VectorXd upper = Eigen::VectorXd::Ones(dim);

  std::vector<Eigen::VectorXd> starts;
  if (opts.starts > 0) starts = lhs_sample(opts.starts, dim, opts.seed);
  starts.insert(starts.end(), extra_starts.begin(), extra_starts.end());
  if (starts.empty()) throw std::invalid_argument("multistart_maximize: no start points");

  SimplexResult best;
  best.value = -std::numeric_limits<double>::infinity();
  for (const auto& s : starts) {
    SimplexResult r = nelder_mead_maximize(objective, s, lower, upper, opts.max_iters);
    if (r.value > best.value ||
        (r.value == best.value && best.x.size() > 0 && lex_less(r.x, best.x))) {
      best = std::move(r);
    }
  }
  return best;
}

}  // namespace miso
