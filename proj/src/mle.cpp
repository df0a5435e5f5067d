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

#include "btl/mle.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>

#include "btl/errors.hpp"
#include "btl/logistic.hpp"
#include "btl/parallel.hpp"

namespace btl {
namespace {

constexpr double kDivergenceCap = 50.0;
constexpr double kRidgeScale = 1e-12;
constexpr double kSmallestStep = 0x1.0p-40;

void check_dim(const Eigen::VectorXd& theta, int n, const char* what) {
  if (theta.size() != n) {
    throw std::invalid_argument(std::string(what) +
                                ": merit vector length does not match n");
  }
}

}  // namespace

double neg_log_likelihood(const Eigen::VectorXd& theta,
                          const ComparisonDataset& data) {
  check_dim(theta, data.n(), "neg_log_likelihood");
  const std::vector<Edge>& edges = data.edges();
  return block_sum(static_cast<std::int64_t>(edges.size()),
                   [&](std::int64_t k) {
                     const Edge& e = edges[static_cast<std::size_t>(k)];
                     const double gap = theta[e.i] - theta[e.j];
                     const double won = e.ybar;
                     const double lost = 1.0 - e.ybar;
                     double term = 0.0;
                     if (won != 0.0) {
                       term += won * softplus(-gap);
                     }
                     if (lost != 0.0) {
                       term += lost * softplus(gap);
                     }
                     return term;
                   });
}

Eigen::VectorXd gradient(const Eigen::VectorXd& theta, const Adjacency& adj) {
  check_dim(theta, adj.n(), "gradient");
  const int n = adj.n();
  Eigen::VectorXd g(n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const auto neighbors = adj.neighbors(i);
    const auto fractions = adj.win_fractions(i);
    double acc = 0.0;
    for (std::size_t k = 0; k < neighbors.size(); ++k) {
      acc += fractions[k] - psi(theta[i] - theta[neighbors[k]]);
    }
    g[i] = -acc;
  }
  return g;
}

Eigen::VectorXd gradient(const Eigen::VectorXd& theta,
                         const ComparisonDataset& data) {
  return gradient(theta, Adjacency(data));
}

Eigen::MatrixXd hessian(const Eigen::VectorXd& theta, const Adjacency& adj) {
  check_dim(theta, adj.n(), "hessian");
  const int n = adj.n();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const auto neighbors = adj.neighbors(i);
    double diag = 0.0;
    for (int j : neighbors) {
      const double w = psi_prime(theta[i] - theta[j]);
      h(i, j) = -w;
      diag += w;
    }
    h(i, i) = diag;
  }
  return h;
}

Eigen::MatrixXd hessian(const Eigen::VectorXd& theta,
                        const ComparisonDataset& data) {
  return hessian(theta, Adjacency(data));
}

EstimateReport fit_mle(const ComparisonDataset& data, const MleOptions& opts) {
  if (opts.grad_tol <= 0.0) {
    throw std::invalid_argument("fit_mle: grad_tol must be positive");
  }
  if (opts.max_iters < 1) {
    throw std::invalid_argument("fit_mle: max_iters must be at least 1");
  }
  const Adjacency adj(data);
  require_fittable(data, adj);
  const int n = data.n();

  EstimateReport report;
  if (opts.initial) {
    check_dim(*opts.initial, n, "fit_mle");
    report.theta = center(*opts.initial);
  } else {
    report.theta = Eigen::VectorXd::Zero(n);
  }

  double value = neg_log_likelihood(report.theta, data);
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    const Eigen::VectorXd g = gradient(report.theta, adj);
    report.residual = g.lpNorm<Eigen::Infinity>();
    if (report.residual <= opts.grad_tol) {
      report.converged = true;
      break;
    }
    if (report.theta.lpNorm<Eigen::Infinity>() > kDivergenceCap) {
      break;
    }

    Eigen::MatrixXd h = hessian(report.theta, adj);
    const double scale = h.trace() / n;
    h.diagonal().array() += kRidgeScale * scale;
    h.array() += scale / n;
    const Eigen::LLT<Eigen::MatrixXd> llt(h);
    if (llt.info() != Eigen::Success) {
      break;
    }
    const Eigen::VectorXd step = center(llt.solve(-g));

    double t = 1.0;
    double candidate_value = 0.0;
    Eigen::VectorXd candidate;
    bool accepted = false;
    while (t >= kSmallestStep) {
      candidate = center(report.theta + t * step);
      candidate_value = neg_log_likelihood(candidate, data);
      if (candidate_value < value) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      // The objective is flat to machine precision near the optimum while
      // the gradient may still exceed grad_tol; the full Newton step keeps
      // contracting the gradient there, so accept it on that criterion.
      candidate = center(report.theta + step);
      if (gradient(candidate, adj).lpNorm<Eigen::Infinity>() <
          report.residual) {
        candidate_value = neg_log_likelihood(candidate, data);
        accepted = true;
      }
    }
    if (!accepted) {
      break;
    }
    report.theta = std::move(candidate);
    value = candidate_value;
    report.iterations = iter + 1;
  }

  report.residual =
      gradient(report.theta, adj).lpNorm<Eigen::Infinity>();
  report.converged = report.residual <= opts.grad_tol &&
                     report.theta.lpNorm<Eigen::Infinity>() <= kDivergenceCap;
  report.neg_log_lik = neg_log_likelihood(report.theta, data);
  return report;
}

}  // namespace btl
