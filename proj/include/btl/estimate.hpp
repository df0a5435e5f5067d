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

#ifndef BTL_ESTIMATE_HPP_
#define BTL_ESTIMATE_HPP_

#include <Eigen/Core>

namespace btl {

// Outcome of a fit. theta is centered. residual is the stopping quantity of
// the solver that produced it: the gradient sup-norm for the likelihood
// solver, the l1 fixed-point residual for the spectral one.
struct EstimateReport {
  Eigen::VectorXd theta;
  int iterations = 0;
  double residual = 0.0;
  bool converged = false;
  double neg_log_lik = 0.0;
};

}  // namespace btl

#endif  // BTL_ESTIMATE_HPP_
