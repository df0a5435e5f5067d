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

#include "btl/reference.hpp"

#include <cmath>

#include <Eigen/QR>

#include "btl/logistic.hpp"

namespace btl::reference {

double neg_log_likelihood(const Eigen::VectorXd& theta,
                          const ComparisonDataset& data) {
  double total = 0.0;
  for (const Edge& e : data.edges()) {
    const double gap = theta[e.i] - theta[e.j];
    if (e.ybar != 0.0) {
      total += e.ybar * softplus(-gap);
    }
    if (e.ybar != 1.0) {
      total += (1.0 - e.ybar) * softplus(gap);
    }
  }
  return total;
}

Eigen::VectorXd gradient(const Eigen::VectorXd& theta,
                         const ComparisonDataset& data) {
  Eigen::VectorXd g = Eigen::VectorXd::Zero(data.n());
  for (const Edge& e : data.edges()) {
    const double resid = e.ybar - psi(theta[e.i] - theta[e.j]);
    g[e.i] -= resid;
    g[e.j] += resid;
  }
  return g;
}

Eigen::MatrixXd hessian(const Eigen::VectorXd& theta,
                        const ComparisonDataset& data) {
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(data.n(), data.n());
  for (const Edge& e : data.edges()) {
    const double w = psi_prime(theta[e.i] - theta[e.j]);
    h(e.i, e.j) -= w;
    h(e.j, e.i) -= w;
    h(e.i, e.i) += w;
    h(e.j, e.j) += w;
  }
  return h;
}

Eigen::VectorXd stationary_dense(const TransitionMatrix& p) {
  const int n = p.n();
  Eigen::MatrixXd a(n + 1, n);
  a.topRows(n) = p.dense().transpose() - Eigen::MatrixXd::Identity(n, n);
  a.bottomRows(1).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(n + 1);
  b[n] = 1.0;
  Eigen::VectorXd pi = a.colPivHouseholderQr().solve(b);
  return pi / pi.sum();
}

Eigen::VectorXd power_sweep(const TransitionMatrix& p,
                            const Eigen::VectorXd& pi) {
  const int n = p.n();
  Eigen::VectorXd out(n);
  for (int j = 0; j < n; ++j) {
    const auto sources = p.sources(j);
    const auto weights = p.incoming_weights(j);
    double acc = pi[j] * p.diagonal(j);
    for (std::size_t k = 0; k < sources.size(); ++k) {
      acc += pi[sources[k]] * weights[k];
    }
    out[j] = acc;
  }
  return out;
}

Eigen::VectorXd mle_main_term(const ComparisonDataset& data,
                              const Eigen::VectorXd& theta_star) {
  const int n = data.n();
  Eigen::VectorXd num = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd den = Eigen::VectorXd::Zero(n);
  for (const Edge& e : data.edges()) {
    const double gap = theta_star[e.i] - theta_star[e.j];
    const double resid = e.ybar - psi(gap);
    const double w = psi_prime(gap);
    num[e.i] += resid;
    num[e.j] -= resid;
    den[e.i] += w;
    den[e.j] += w;
  }
  return num.cwiseQuotient(den);
}

Eigen::VectorXd spectral_main_term(const ComparisonDataset& data,
                                   const Eigen::VectorXd& theta_star) {
  const int n = data.n();
  const Eigen::VectorXd pi = merit_to_pi(theta_star);
  Eigen::VectorXd num = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd den = Eigen::VectorXd::Zero(n);
  for (const Edge& e : data.edges()) {
    const double gap = theta_star[e.i] - theta_star[e.j];
    const double resid = e.ybar - psi(gap);
    const double pair_mass = pi[e.i] + pi[e.j];
    num[e.i] += pair_mass * resid;
    num[e.j] -= pair_mass * resid;
    den[e.i] += pi[e.i] * psi(-gap);
    den[e.j] += pi[e.j] * psi(gap);
  }
  return num.cwiseQuotient(den);
}

Eigen::VectorXd rho_mle(const Eigen::VectorXd& theta,
                        const ComparisonDataset& data, bool sample_graph,
                        double p) {
  const int n = data.n();
  Eigen::VectorXd s = Eigen::VectorXd::Zero(n);
  double scale;
  if (sample_graph) {
    scale = static_cast<double>(data.edges().front().count);
    for (const Edge& e : data.edges()) {
      const double w = psi_prime(theta[e.i] - theta[e.j]);
      s[e.i] += w;
      s[e.j] += w;
    }
  } else {
    scale = p * static_cast<double>(data.edges().front().count);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j != i) {
          s[i] += psi_prime(theta[i] - theta[j]);
        }
      }
    }
  }
  return (scale * s.array()).sqrt();
}

Eigen::VectorXd rho_spectral(const Eigen::VectorXd& theta,
                             const ComparisonDataset& data, bool sample_graph,
                             double p) {
  const int n = data.n();
  const Eigen::VectorXd u = theta.array().exp();
  Eigen::VectorXd s1 = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd s2 = Eigen::VectorXd::Zero(n);
  double scale;
  if (sample_graph) {
    scale = static_cast<double>(data.edges().front().count);
    for (const Edge& e : data.edges()) {
      const double w = psi_prime(theta[e.i] - theta[e.j]);
      const double pair = u[e.i] + u[e.j];
      s1[e.i] += pair * w;
      s1[e.j] += pair * w;
      s2[e.i] += pair * pair * w;
      s2[e.j] += pair * pair * w;
    }
  } else {
    scale = p * static_cast<double>(data.edges().front().count);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (j != i) {
          const double w = psi_prime(theta[i] - theta[j]);
          const double pair = u[i] + u[j];
          s1[i] += pair * w;
          s2[i] += pair * pair * w;
        }
      }
    }
  }
  return (scale * s1.array().square() / s2.array()).sqrt();
}

double l2_constant_mle(const Eigen::VectorXd& theta_star, double p,
                       std::int64_t L) {
  const int n = static_cast<int>(theta_star.size());
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) {
        s += psi_prime(theta_star[i] - theta_star[j]);
      }
    }
    total += 1.0 / (p * static_cast<double>(L) * s);
  }
  return total;
}

double l2_constant_spectral(const Eigen::VectorXd& theta_star, double p,
                            std::int64_t L) {
  const int n = static_cast<int>(theta_star.size());
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double s1 = 0.0;
    double s2 = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) {
        const double w = psi_prime(theta_star[i] - theta_star[j]);
        const double pair = std::exp(theta_star[i]) + std::exp(theta_star[j]);
        s1 += pair * w;
        s2 += pair * pair * w;
      }
    }
    total += s2 / (p * static_cast<double>(L) * s1 * s1);
  }
  return total;
}

}  // namespace btl::reference
