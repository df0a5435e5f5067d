// Copyright 2026 The btlrank Authors.
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

#ifndef BTL_MLE_HPP_
#define BTL_MLE_HPP_

#include <optional>

#include <Eigen/Core>

#include "btl/dataset.hpp"
#include "btl/estimate.hpp"

namespace btl {

// Negative log-likelihood of the centered-parameter logistic pairwise model,
//   sum over pairs (i, j) of ybar_ij * softplus(theta_j - theta_i)
//                          + (1 - ybar_ij) * softplus(theta_i - theta_j).
// Zero win fractions contribute exactly zero regardless of the gap.
double neg_log_likelihood(const Eigen::VectorXd& theta,
                          const ComparisonDataset& data);

// Gradient: entry i equals -sum over neighbors j of
// (ybar_ij - psi(theta_i - theta_j)). Entries sum to zero analytically.
Eigen::VectorXd gradient(const Eigen::VectorXd& theta, const Adjacency& adj);
Eigen::VectorXd gradient(const Eigen::VectorXd& theta,
                         const ComparisonDataset& data);

// Hessian: the graph Laplacian weighted by psi'(theta_i - theta_j).
// Positive semidefinite with null vector 1; positive definite on the
// centered subspace when the graph is connected.
Eigen::MatrixXd hessian(const Eigen::VectorXd& theta, const Adjacency& adj);
Eigen::MatrixXd hessian(const Eigen::VectorXd& theta,
                        const ComparisonDataset& data);

struct MleOptions {
  double grad_tol = 1e-10;  // sup-norm stopping threshold
  int max_iters = 100;
  std::optional<Eigen::VectorXd> initial;  // centered before use; default 0
};

// Damped Newton on the centered subspace. Each step solves
// (H + ridge I + (tr H / n) 11^T / n) s = -g with ridge = 1e-12 tr H / n,
// then backtracks by halving until the objective decreases, and re-centers.
// When the objective is flat to machine precision, the full step is still
// taken as long as it shrinks the gradient sup-norm.
// Stops with converged=false, without throwing, when the iteration budget
// runs out, no decreasing step exists, or |theta|_inf exceeds 50 (the
// maximizer fails to exist when some item never wins or never loses).
// Throws for structurally unusable data (duplicates, out-of-range win
// fractions, disconnected graph).
EstimateReport fit_mle(const ComparisonDataset& data,
                       const MleOptions& opts = {});

}  // namespace btl

#endif  // BTL_MLE_HPP_
