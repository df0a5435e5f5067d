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

#ifndef BTL_REFERENCE_HPP_
#define BTL_REFERENCE_HPP_

#include <cstdint>

#include <Eigen/Core>

#include "btl/dataset.hpp"
#include "btl/spectral.hpp"

// Serial, single-pass implementations of every kernel, written directly off
// the defining formulas with plain edge-list loops. They are the baseline
// the parallel kernels are tested against and benchmarked over; keep them
// boring.
namespace btl::reference {

double neg_log_likelihood(const Eigen::VectorXd& theta,
                          const ComparisonDataset& data);

Eigen::VectorXd gradient(const Eigen::VectorXd& theta,
                         const ComparisonDataset& data);

Eigen::MatrixXd hessian(const Eigen::VectorXd& theta,
                        const ComparisonDataset& data);

// Stationary distribution via a dense least-squares solve of
// pi^T (P - I) = 0 with sum pi = 1; exact up to the dense solver, no
// iteration involved.
Eigen::VectorXd stationary_dense(const TransitionMatrix& p);

// One left-multiplication sweep pi^T P, serial.
Eigen::VectorXd power_sweep(const TransitionMatrix& p,
                            const Eigen::VectorXd& pi);

Eigen::VectorXd mle_main_term(const ComparisonDataset& data,
                              const Eigen::VectorXd& theta_star);

Eigen::VectorXd spectral_main_term(const ComparisonDataset& data,
                                   const Eigen::VectorXd& theta_star);

Eigen::VectorXd rho_mle(const Eigen::VectorXd& theta,
                        const ComparisonDataset& data, bool sample_graph,
                        double p);

Eigen::VectorXd rho_spectral(const Eigen::VectorXd& theta,
                             const ComparisonDataset& data, bool sample_graph,
                             double p);

double l2_constant_mle(const Eigen::VectorXd& theta_star, double p,
                       std::int64_t L);

double l2_constant_spectral(const Eigen::VectorXd& theta_star, double p,
                            std::int64_t L);

}  // namespace btl::reference

#endif  // BTL_REFERENCE_HPP_
