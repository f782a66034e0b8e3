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

#ifndef MISO_GP_HPP
#define MISO_GP_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>

namespace miso {

// Raised when the covariance matrix cannot be factorized even at the top of
// the jitter ladder: duplicate locations with zero noise, or hyperparameters
// that drive the Gram matrix numerically singular.
struct IllConditioned : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matern 3/2 hyperparameters. Both strictly positive; optimized on log scale.
struct KernelParams {
  double amplitude = 1.0;    // sigma_k^2
  double lengthscale = 0.2;  // ell
};

// k(r) = sigma_k^2 (1 + sqrt(3) r / ell) exp(-sqrt(3) r / ell)
double matern32(double r, const KernelParams& params);

struct Prediction {
  double mean = 0.0;
  double variance = 0.0;
};

// Exact GP posterior, conditioned by Cholesky factorization on standardized
// targets. Fitted models are immutable value types; concurrent reads are
// safe.
struct GPModel {
  Eigen::MatrixXd X;     // n x d training locations in [0,1]^d
  Eigen::VectorXd y;     // standardized targets
  KernelParams kernel;
  double noise_var = 0.0;  // lambda^2
  Eigen::MatrixXd chol;    // lower factor of K + (noise_var + jitter) I
  Eigen::VectorXd alpha;   // (K + (noise_var + jitter) I)^{-1} y
  double y_mean = 0.0;
  double y_std = 1.0;
  double jitter = 0.0;

  int size() const { return static_cast<int>(X.rows()); }
  int dim() const { return static_cast<int>(X.cols()); }

  // Posterior mean and variance at x, de-standardized to the original target
  // scale. Variance is clamped at zero after round-off.
  Prediction predict(const Eigen::VectorXd& x) const;
};

// Fits an exact GP with the given hyperparameters. Targets are standardized
// (mean removed always; scaling skipped when their variance is below 1e-12).
// Factorization escalates jitter through {1e-10, ..., 1e-4} and throws
// IllConditioned when the ladder is exhausted.
GPModel fit_gp(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double noise_var,
               const KernelParams& kernel);

Prediction predict(const GPModel& model, const Eigen::VectorXd& x);

// Gaussian log marginal likelihood of the standardized targets:
// -1/2 y'alpha - sum_i log L_ii - n/2 log(2 pi).
double log_marginal_likelihood(const GPModel& model);

struct FitOptions {
  bool learn_noise = true;
  double noise_floor = 1e-8;  // lower bound on lambda^2 when learned
  double fixed_noise = 0.0;   // lambda^2 when learn_noise is false
  int restarts = 10;          // 1 default start + (restarts-1) LHS draws
  int max_iters = 200;        // per local search
  std::uint64_t seed = 0;
};

// Maximum-likelihood hyperparameter fit: multi-start bounded simplex search
// over log(sigma_k^2) in [log 1e-3, log 1e3], log(ell) in [log 1e-2, log 10]
// and, when noise is learned, log(lambda^2) in [log noise_floor, log 1].
// Ties between starts break toward the lowest start index. With fewer than
// two observations the search is ill-posed and prior-like defaults are
// returned (sigma_k^2 = 1, ell = 0.2, lambda^2 at the floor).
GPModel mle_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y,
                const FitOptions& options = {});

}  // namespace miso

#endif  // MISO_GP_HPP
