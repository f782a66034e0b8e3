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

#include "miso/gp.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "miso/lhs.hpp"
#include "miso/nelder_mead.hpp"

namespace miso {

namespace {

constexpr double kSqrt3 = 1.7320508075688772935;
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kJitterStart = 1e-10;
constexpr double kJitterCap = 1e-4;

Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& X) {
  const Eigen::Index n = X.rows();
  Eigen::MatrixXd D(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    D(i, i) = 0.0;
    for (Eigen::Index j = 0; j < i; ++j) {
      const double r = (X.row(i) - X.row(j)).norm();
      D(i, j) = r;
      D(j, i) = r;
    }
  }
  return D;
}

void kernel_matrix(const Eigen::MatrixXd& D, const KernelParams& k, double diag_add,
                   Eigen::MatrixXd& K) {
  const double scale = kSqrt3 / k.lengthscale;
  K = (1.0 + scale * D.array()) * (-scale * D.array()).exp() * k.amplitude;
  K.diagonal().array() += diag_add;
}

// One factorization attempt. A usable factor needs every pivot to clear the
// given floor: duplicate rows (or a numerically singular Gram matrix) leave
// the smallest pivot at roughly 2*jitter no matter how far the ladder
// escalates, which is what the 4*pivot_floor test rejects.
bool try_factorize(const Eigen::MatrixXd& K, double pivot_floor, Eigen::MatrixXd& L) {
  Eigen::LLT<Eigen::MatrixXd> llt(K);
  if (llt.info() != Eigen::Success) return false;
  L = llt.matrixL();
  const double min_pivot = L.diagonal().minCoeff();
  if (!std::isfinite(min_pivot) || min_pivot * min_pivot <= 4.0 * pivot_floor) return false;
  return true;
}

struct Factorization {
  Eigen::MatrixXd L;
  double jitter = 0.0;
};

// Cholesky of K0, retried with escalating jitter. The plain attempt keeps
// the ladder-start pivot floor so a matrix cannot pass unjittered with
// pivots the first rung would reject.
bool factorize_with_ladder(const Eigen::MatrixXd& K0, Factorization& out) {
  if (try_factorize(K0, kJitterStart, out.L)) {
    out.jitter = 0.0;
    return true;
  }
  Eigen::MatrixXd K;
  for (double jitter = kJitterStart; jitter <= kJitterCap * 1.0000001; jitter *= 10.0) {
    K = K0;
    K.diagonal().array() += jitter;
    if (try_factorize(K, jitter, out.L)) {
      out.jitter = jitter;
      return true;
    }
  }
  return false;
}

struct Standardized {
  Eigen::VectorXd y;
  double mean = 0.0;
  double std = 1.0;
};

Standardized standardize(const Eigen::VectorXd& y) {
  Standardized s;
  s.mean = y.mean();
  const Eigen::VectorXd centered = y.array() - s.mean;
  const double var = centered.squaredNorm() / static_cast<double>(y.size());
  s.std = var >= 1e-12 ? std::sqrt(var) : 1.0;
  s.y = centered / s.std;
  return s;
}

// LML of standardized targets for given hyperparameters, on precomputed
// distances; -inf when the factorization fails. This is the hot loop of
// mle_fit.
class MarginalLikelihood {
 public:
  MarginalLikelihood(const Eigen::MatrixXd& D, const Eigen::VectorXd& ys) : D_(D), ys_(ys) {}

  double operator()(const KernelParams& k, double noise_var) const {
    kernel_matrix(D_, k, noise_var, K_);
    Factorization fac;
    if (!factorize_with_ladder(K_, fac)) {
      return -std::numeric_limits<double>::infinity();
    }
    const Eigen::VectorXd alpha = fac.L.triangularView<Eigen::Lower>().solve(ys_);
    const double n = static_cast<double>(ys_.size());
    return -0.5 * alpha.squaredNorm() - fac.L.diagonal().array().log().sum() - 0.5 * n * kLog2Pi;
  }

 private:
  const Eigen::MatrixXd& D_;
  const Eigen::VectorXd& ys_;
  mutable Eigen::MatrixXd K_;
};

GPModel fit_on_distances(const Eigen::MatrixXd& X, const Eigen::MatrixXd& D,
                         const Eigen::VectorXd& y, double noise_var, const KernelParams& kernel) {
  GPModel m;
  m.X = X;
  m.kernel = kernel;
  m.noise_var = noise_var;

  const Standardized s = standardize(y);
  m.y = s.y;
  m.y_mean = s.mean;
  m.y_std = s.std;

  Eigen::MatrixXd K;
  kernel_matrix(D, kernel, noise_var, K);
  Factorization fac;
  if (!factorize_with_ladder(K, fac)) {
    throw IllConditioned("covariance factorization failed at jitter cap");
  }
  m.chol = std::move(fac.L);
  m.jitter = fac.jitter;
  m.alpha = m.chol.triangularView<Eigen::Lower>().solve(m.y);
  m.chol.triangularView<Eigen::Lower>().adjoint().solveInPlace(m.alpha);
  return m;
}

}  // namespace

double matern32(double r, const KernelParams& params) {
  const double s = kSqrt3 * r / params.lengthscale;
  return params.amplitude * (1.0 + s) * std::exp(-s);
}

GPModel fit_gp(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, double noise_var,
               const KernelParams& kernel) {
  if (X.rows() < 1 || X.rows() != y.size()) {
    throw std::invalid_argument("fit_gp: need |X| = |y| >= 1");
  }
  if (!X.allFinite() || !y.allFinite()) {
    throw std::invalid_argument("fit_gp: non-finite training data");
  }
  return fit_on_distances(X, pairwise_distances(X), y, noise_var, kernel);
}

Prediction GPModel::predict(const Eigen::VectorXd& x) const {
  const Eigen::Index n = X.rows();
  Eigen::VectorXd k(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    k[i] = matern32((X.row(i).transpose() - x).norm(), kernel);
  }
  const Eigen::VectorXd v = chol.triangularView<Eigen::Lower>().solve(k);
  Prediction p;
  p.mean = y_mean + y_std * k.dot(alpha);
  const double var_std = kernel.amplitude - v.squaredNorm();
  p.variance = std::max(0.0, var_std) * y_std * y_std;
  return p;
}

Prediction predict(const GPModel& model, const Eigen::VectorXd& x) { return model.predict(x); }

double log_marginal_likelihood(const GPModel& model) {
  const double n = static_cast<double>(model.y.size());
  return -0.5 * model.y.dot(model.alpha) - model.chol.diagonal().array().log().sum() -
         0.5 * n * kLog2Pi;
}

GPModel mle_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y, const FitOptions& options) {
  if (X.rows() != y.size()) {
    throw std::invalid_argument("mle_fit: need |X| = |y|");
  }
  const double default_noise = options.learn_noise ? options.noise_floor : options.fixed_noise;
  const KernelParams default_kernel{1.0, 0.2};
  if (X.rows() < 2) {
    if (X.rows() == 0) throw std::invalid_argument("mle_fit: need at least one observation");
    return fit_gp(X, y, default_noise, default_kernel);
  }

  const Eigen::MatrixXd D = pairwise_distances(X);
  const Standardized s = standardize(y);
  const MarginalLikelihood lml(D, s.y);

  const int n_params = options.learn_noise ? 3 : 2;
  Eigen::VectorXd lo(n_params), hi(n_params);
  lo[0] = std::log(1e-3);
  hi[0] = std::log(1e3);
  lo[1] = std::log(1e-2);
  hi[1] = std::log(10.0);
  if (options.learn_noise) {
    lo[2] = std::log(options.noise_floor);
    hi[2] = 0.0;  // log(1)
  }

  auto unpack = [&](const Eigen::VectorXd& theta, KernelParams& k, double& noise) {
    k.amplitude = std::exp(theta[0]);
    k.lengthscale = std::exp(theta[1]);
    noise = options.learn_noise ? std::exp(theta[2]) : options.fixed_noise;
  };
  auto objective = [&](const Eigen::VectorXd& theta) {
    KernelParams k;
    double noise;
    unpack(theta, k, noise);
    return lml(k, noise);
  };

  std::vector<Eigen::VectorXd> starts;
  Eigen::VectorXd theta0(n_params);
  theta0[0] = std::log(default_kernel.amplitude);
  theta0[1] = std::log(default_kernel.lengthscale);
  if (options.learn_noise) theta0[2] = std::log(options.noise_floor);
  starts.push_back(theta0);
  if (options.restarts > 1) {
    for (const auto& u : lhs_sample(options.restarts - 1, n_params, options.seed)) {
      starts.push_back(lo + u.cwiseProduct(hi - lo));
    }
  }

  double best_value = -std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_theta;
  for (const auto& start : starts) {
    const SimplexResult r =
        nelder_mead_maximize(objective, start, lo, hi, options.max_iters, 0.1);
    if (r.value > best_value) {  // strict: ties keep the lowest start index
      best_value = r.value;
      best_theta = r.x;
    }
  }
  if (!std::isfinite(best_value)) {
    throw IllConditioned("mle_fit: every restart failed to factorize");
  }

  KernelParams k;
  double noise;
  unpack(best_theta, k, noise);
  return fit_on_distances(X, D, y, noise, k);
}

}  // namespace miso
