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

#ifndef BTL_EXPANSION_HPP_
#define BTL_EXPANSION_HPP_

#include <cstdint>

#include <Eigen/Core>

#include "btl/dataset.hpp"

namespace btl {

// First-order term of the likelihood estimator around the true merits:
//   main_i = sum_j A_ij (ybar_ij - psi_ij) / sum_j A_ij psi'_ij
// with psi_ij = psi(theta*_i - theta*_j). Throws IsolatedItemError when an
// item has no comparisons.
Eigen::VectorXd mle_main_term(const ComparisonDataset& data,
                              const Eigen::VectorXd& theta_star);

// First-order term of the spectral estimator, with pi* = softmax(theta*):
//   main_i = sum_j A_ij (pi*_i + pi*_j)(ybar_ij - psi_ij)
//            / (pi*_i sum_j A_ij psi(theta*_j - theta*_i)).
Eigen::VectorXd spectral_main_term(const ComparisonDataset& data,
                                   const Eigen::VectorXd& theta_star);

// Defect of the first-order expansion. delta is centered, so a global shift
// of the estimate does not register.
struct ExpansionReport {
  Eigen::VectorXd main_term;
  Eigen::VectorXd delta;   // center(estimate - theta_star - main_term)
  double scaled_sup = 0.0;  // |delta|_inf * sqrt(n p L)
  double scaled_l2 = 0.0;   // |delta|_2  * sqrt(p L)
};

ExpansionReport remainder_report(const Eigen::VectorXd& estimate,
                                 const Eigen::VectorXd& theta_star,
                                 const Eigen::VectorXd& main_term, double p,
                                 std::int64_t L);

}  // namespace btl

#endif  // BTL_EXPANSION_HPP_
