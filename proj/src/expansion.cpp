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

#include "btl/expansion.hpp"

#include <cmath>
#include <stdexcept>

#include "btl/errors.hpp"
#include "btl/logistic.hpp"

namespace btl {
namespace {

void check_inputs(const ComparisonDataset& data,
                  const Eigen::VectorXd& theta_star, const char* what) {
  if (theta_star.size() != data.n()) {
    throw std::invalid_argument(std::string(what) +
                                ": merit vector length does not match n");
  }
}

}  // namespace

Eigen::VectorXd mle_main_term(const ComparisonDataset& data,
                              const Eigen::VectorXd& theta_star) {
  check_inputs(data, theta_star, "mle_main_term");
  const Adjacency adj(data);
  const int n = adj.n();
  Eigen::VectorXd main(n);
  for (int i = 0; i < n; ++i) {
    if (adj.degree(i) == 0) {
      throw IsolatedItemError(i);
    }
  }
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const auto neighbors = adj.neighbors(i);
    const auto fractions = adj.win_fractions(i);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < neighbors.size(); ++k) {
      const double gap = theta_star[i] - theta_star[neighbors[k]];
      num += fractions[k] - psi(gap);
      den += psi_prime(gap);
    }
    main[i] = num / den;
  }
  return main;
}

Eigen::VectorXd spectral_main_term(const ComparisonDataset& data,
                                   const Eigen::VectorXd& theta_star) {
  check_inputs(data, theta_star, "spectral_main_term");
  const Adjacency adj(data);
  const int n = adj.n();
  const Eigen::VectorXd pi = merit_to_pi(theta_star);
  Eigen::VectorXd main(n);
  for (int i = 0; i < n; ++i) {
    if (adj.degree(i) == 0) {
      throw IsolatedItemError(i);
    }
  }
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    const auto neighbors = adj.neighbors(i);
    const auto fractions = adj.win_fractions(i);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t k = 0; k < neighbors.size(); ++k) {
      const int j = neighbors[k];
      const double gap = theta_star[i] - theta_star[j];
      num += (pi[i] + pi[j]) * (fractions[k] - psi(gap));
      den += psi(-gap);
    }
    main[i] = num / (pi[i] * den);
  }
  return main;
}

ExpansionReport remainder_report(const Eigen::VectorXd& estimate,
                                 const Eigen::VectorXd& theta_star,
                                 const Eigen::VectorXd& main_term, double p,
                                 std::int64_t L) {
  const Eigen::Index n = estimate.size();
  if (n == 0 || theta_star.size() != n || main_term.size() != n) {
    throw std::invalid_argument("remainder_report: length mismatch");
  }
  if (!(p > 0.0) || p > 1.0) {
    throw std::invalid_argument("remainder_report: p must lie in (0, 1]");
  }
  if (L < 1) {
    throw std::invalid_argument("remainder_report: L must be at least 1");
  }
  ExpansionReport out;
  out.main_term = main_term;
  out.delta = center(estimate - theta_star - main_term);
  const double pl = p * static_cast<double>(L);
  out.scaled_sup =
      out.delta.lpNorm<Eigen::Infinity>() * std::sqrt(static_cast<double>(n) * pl);
  out.scaled_l2 = out.delta.norm() * std::sqrt(pl);
  return out;
}

}  // namespace btl
