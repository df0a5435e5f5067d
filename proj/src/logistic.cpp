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

#include "btl/logistic.hpp"

#include <cmath>
#include <stdexcept>

namespace btl {

double psi(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("psi: non-finite input");
  }
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double psi_prime(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("psi_prime: non-finite input");
  }
  // Evaluate on the small side so e never overflows; e / (1+e)^2 is
  // unchanged under x -> -x.
  const double e = std::exp(-std::abs(x));
  const double denom = 1.0 + e;
  return e / (denom * denom);
}

double softplus(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("softplus: non-finite input");
  }
  if (x > 0.0) {
    return x + std::log1p(std::exp(-x));
  }
  return std::log1p(std::exp(x));
}

Eigen::VectorXd center(const Eigen::VectorXd& values) {
  if (values.size() == 0) {
    throw std::domain_error("center: empty vector");
  }
  return values.array() - values.mean();
}

Eigen::VectorXd merit_to_pi(const Eigen::VectorXd& theta) {
  if (theta.size() == 0) {
    throw std::domain_error("merit_to_pi: empty vector");
  }
  const double shift = theta.maxCoeff();
  Eigen::VectorXd pi = (theta.array() - shift).exp();
  pi /= pi.sum();
  return pi;
}

}  // namespace btl
