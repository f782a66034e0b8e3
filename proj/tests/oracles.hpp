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

// Test-only reference implementations. These deliberately recompute
// everything from first principles (explicit matrix inverses, dense grids,
// spelled-out formulas) and must stay independent of the library's own
// Cholesky/search code paths.

#ifndef MISO_TESTS_ORACLES_HPP
#define MISO_TESTS_ORACLES_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "miso/gp.hpp"
#include "miso/rng.hpp"

namespace oracle {

// The kernel formula written out directly.
inline double matern(double r, double amplitude, double lengthscale) {
  const double s = std::sqrt(3.0) * r / lengthscale;
  return amplitude * (1.0 + s) * std::exp(-s);
}

inline Eigen::MatrixXd kernel_matrix(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                     double amplitude, double lengthscale) {
  Eigen::MatrixXd K(A.rows(), B.rows());
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < B.rows(); ++j) {
      K(i, j) = matern((A.row(i) - B.row(j)).norm(), amplitude, lengthscale);
    }
  }
  return K;
}

struct Posterior {
  double mean = 0.0;
  double variance = 0.0;
};

// Posterior by explicit dense inverse, on whatever target scale `y` is in.
// total_noise is the full diagonal addition (noise variance plus jitter).
inline Posterior dense_posterior(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                                 double amplitude, double lengthscale, double total_noise,
                                 const Eigen::VectorXd& query) {
  const Eigen::Index n = X.rows();
  Eigen::MatrixXd K = kernel_matrix(X, X, amplitude, lengthscale);
  K.diagonal().array() += total_noise;
  const Eigen::MatrixXd Kinv = K.fullPivLu().inverse();
  Eigen::VectorXd k(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k[i] = matern((X.row(i).transpose() - query).norm(), amplitude, lengthscale);
  }
  Posterior p;
  p.mean = k.dot(Kinv * y);
  p.variance = matern(0.0, amplitude, lengthscale) - k.dot(Kinv * k);
  return p;
}

// The standardized-scale posterior matching a fitted model's internals.
inline Posterior dense_posterior_standardized(const miso::GPModel& m,
                                              const Eigen::VectorXd& query) {
  return dense_posterior(m.X, m.y, m.kernel.amplitude, m.kernel.lengthscale,
                         m.noise_var + m.jitter, query);
}

// Log marginal likelihood via eigendecomposition (no Cholesky anywhere).
inline double dense_lml(const miso::GPModel& m) {
  const Eigen::Index n = m.X.rows();
  Eigen::MatrixXd K =
      kernel_matrix(m.X, m.X, m.kernel.amplitude, m.kernel.lengthscale);
  K.diagonal().array() += m.noise_var + m.jitter;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
  const double logdet = es.eigenvalues().array().log().sum();
  const double quad = m.y.dot(K.fullPivLu().solve(m.y));
  return -0.5 * quad - 0.5 * logdet -
         0.5 * static_cast<double>(n) * std::log(2.0 * 3.14159265358979323846);
}

struct GridPoint {
  double x = 0.0;
  double value = 0.0;
};

// Exhaustive 1-d maximizer on a uniform [0,1] grid.
inline GridPoint grid_argmax_1d(const std::function<double(double)>& f, int points) {
  GridPoint best{0.0, f(0.0)};
  for (int i = 1; i < points; ++i) {
    const double x = static_cast<double>(i) / static_cast<double>(points - 1);
    const double v = f(x);
    if (v > best.value) best = GridPoint{x, v};
  }
  return best;
}

inline GridPoint grid_argmin_1d(const std::function<double(double)>& f, int points) {
  const GridPoint flipped = grid_argmax_1d([&](double x) { return -f(x); }, points);
  return GridPoint{flipped.x, -flipped.value};
}

// Draw one sample path of a zero-mean GP at the given 1-d inputs.
inline Eigen::VectorXd gp_draw_1d(const Eigen::MatrixXd& X, double amplitude, double lengthscale,
                                  double noise_std, miso::Rng& rng) {
  const Eigen::Index n = X.rows();
  Eigen::MatrixXd K = kernel_matrix(X, X, amplitude, lengthscale);
  K.diagonal().array() += 1e-10;
  const Eigen::MatrixXd L = K.llt().matrixL();
  Eigen::VectorXd z(n);
  for (Eigen::Index i = 0; i < n; ++i) z[i] = miso::normal01(rng);
  Eigen::VectorXd y = L * z;
  for (Eigen::Index i = 0; i < n; ++i) y[i] += noise_std * miso::normal01(rng);
  return y;
}

inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

// Random d-column locations in [0,1]^d as a row-per-point matrix.
inline Eigen::MatrixXd random_locations(int n, int d, miso::Rng& rng) {
  Eigen::MatrixXd X(n, d);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) X(i, j) = miso::uniform01(rng);
  }
  return X;
}

}  // namespace oracle

#endif  // MISO_TESTS_ORACLES_HPP
