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

#ifndef BTL_LOGISTIC_HPP_
#define BTL_LOGISTIC_HPP_

#include <Eigen/Core>

namespace btl {

// Logistic function psi(x) = e^x / (1 + e^x), evaluated without overflow
// for any finite x. Throws std::domain_error on non-finite input.
double psi(double x);

// psi'(x) = psi(x) * (1 - psi(x)). Symmetric in x by construction.
double psi_prime(double x);

// log(1 + e^x) without overflow. softplus(-x) = -log(psi(x)).
double softplus(double x);

// Subtracts the arithmetic mean, so the result sums to zero.
// Throws std::domain_error on an empty vector.
Eigen::VectorXd center(const Eigen::VectorXd& values);

// Softmax: pi_i = e^{theta_i} / sum_k e^{theta_k}. Invariant under adding
// a constant to theta; the result is a probability vector.
Eigen::VectorXd merit_to_pi(const Eigen::VectorXd& theta);

}  // namespace btl

#endif  // BTL_LOGISTIC_HPP_
