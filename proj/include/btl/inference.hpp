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

#ifndef BTL_INFERENCE_HPP_
#define BTL_INFERENCE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "btl/dataset.hpp"

namespace btl {

// Standard normal CDF.
double normal_cdf(double x);

// Standard normal quantile, accurate to well below 1e-9 on (0, 1).
// Throws std::domain_error outside (0, 1).
double normal_quantile(double prob);

// Inverse asymptotic standard deviations rho_i for the likelihood estimate:
// with the sample graph, rho_i = sqrt(L sum_{j ~ i} psi'(theta_i - theta_j));
// with the population graph, rho_i = sqrt(p L sum_{j != i} psi'(...)).
// The sample variant needs a homogeneous per-edge count L and positive
// degrees; the population variant needs p (argument or dataset metadata).
Eigen::VectorXd rho_mle(const Eigen::VectorXd& theta,
                        const ComparisonDataset& data,
                        bool sample_graph = true,
                        std::optional<double> p = {});

// Same for the spectral estimate, with u_i = e^{theta_i}:
//   rho_i = sqrt(L (sum_{j ~ i} (u_i + u_j) psi'_ij)^2
//                / sum_{j ~ i} (u_i + u_j)^2 psi'_ij),
// population variant with full sums scaled by p L. By Cauchy-Schwarz this
// never exceeds rho_mle at the same theta.
Eigen::VectorXd rho_spectral(const Eigen::VectorXd& theta,
                             const ComparisonDataset& data,
                             bool sample_graph = true,
                             std::optional<double> p = {});

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  double length() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
};

// Two-sided level-(1 - alpha) interval for one merit:
// theta_t -+ z_{1 - alpha/2} / rho_t.
Interval ci_target(const Eigen::VectorXd& theta, const Eigen::VectorXd& rho,
                   int target, double alpha);

// Half-widths tau_i = (1 + c0) sqrt(2 log n) / rho_i of the simultaneous
// intervals used for ranking.
Eigen::VectorXd simultaneous_half_widths(const Eigen::VectorXd& rho,
                                         double c0);

// The target's CLT interval plus simultaneous intervals theta_i -+ tau_i for
// every item (the target's own simultaneous interval is kept but unused by
// the rank bound).
struct IntervalSet {
  int target = 0;
  double alpha = 0.05;
  double c0 = 0.1;
  Interval target_interval;
  std::vector<Interval> others;
};

IntervalSet build_interval_set(const Eigen::VectorXd& theta,
                               const Eigen::VectorXd& rho, int target,
                               double alpha, double c0);

// Rank bounds from interval separation, with strict comparisons: n1 counts
// items whose simultaneous interval lies wholly above the target interval,
// n2 wholly below. Ranks are 1-based; rank 1 is the largest merit.
struct RankInterval {
  int n1 = 0;
  int n2 = 0;
  int lo = 1;
  int hi = 1;
};

RankInterval rank_ci(const IntervalSet& set);

// Leading constants of the expected squared l2 risk, evaluated at the true
// merits with population-graph sums: sum_i 1 / rho_i^2 for the respective
// estimator. The spectral constant is never below the likelihood one.
double l2_constant_mle(const Eigen::VectorXd& theta_star, double p,
                       std::int64_t L);
double l2_constant_spectral(const Eigen::VectorXd& theta_star, double p,
                            std::int64_t L);

}  // namespace btl

#endif  // BTL_INFERENCE_HPP_
