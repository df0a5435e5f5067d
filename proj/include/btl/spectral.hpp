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

#ifndef BTL_SPECTRAL_HPP_
#define BTL_SPECTRAL_HPP_

#include <cstdint>
#include <optional>

#include <Eigen/Core>

#include "btl/dataset.hpp"
#include "btl/estimate.hpp"

namespace btl {

// Row-stochastic transition matrix of the comparison chain,
//   P_ij = ybar_ji / d for compared pairs (mass flows toward the winner),
//   P_ii = 1 - sum of row i's off-diagonal mass.
// Off-diagonal row mass above 1 + 1e-12 throws
// DegenerateNormalizationError; tiny negative diagonals are clamped to 0.
class TransitionMatrix {
 public:
  TransitionMatrix(const Adjacency& adj, double d);

  int n() const { return n_; }
  double d() const { return d_; }
  double diagonal(int i) const { return diag_[static_cast<std::size_t>(i)]; }
  std::span<const int> sources(int j) const { return adj_->neighbors(j); }
  // incoming_weights(j)[k] is P_{sources(j)[k] -> j}.
  std::span<const double> incoming_weights(int j) const {
    return {weight_in_.data() + offset_[static_cast<std::size_t>(j)],
            static_cast<std::size_t>(adj_->degree(j))};
  }
  Eigen::MatrixXd dense() const;

 private:
  const Adjacency* adj_;
  int n_;
  double d_;
  std::vector<std::int64_t> offset_;
  std::vector<double> weight_in_;
  std::vector<double> diag_;
};

// Normalization for the transition matrix: 2 n p when the dataset records
// its edge probability, otherwise twice the maximum degree.
double default_normalization(const ComparisonDataset& data,
                             const Adjacency& adj);

struct StationaryOptions {
  double tol = 1e-13;  // l1 distance between successive iterates
  std::int64_t max_iters = 1000000;
};

struct StationaryResult {
  Eigen::VectorXd pi;
  std::int64_t iterations = 0;
  double residual = 0.0;  // |pi^T P - pi^T|_1 at the returned pi
};

// Left power iteration from the uniform vector, renormalized each sweep.
// Throws ConvergenceError when the budget runs out and ReducibleChainError
// when the limit puts less than 1e-12/n mass on some item.
StationaryResult stationary(const TransitionMatrix& p,
                            const StationaryOptions& opts = {});

// Log-merits from a stationary distribution: log pi minus its mean.
Eigen::VectorXd merits_from_stationary(const Eigen::VectorXd& pi);

struct SpectralOptions {
  std::optional<double> d;  // overrides default_normalization
  StationaryOptions stationary;
};

// Spectral ranking estimate. The centered estimate is invariant to the
// choice of d (larger d only slows mixing). Throws ReducibleChainError
// upfront when some item never wins or never loses.
EstimateReport fit_spectral(const ComparisonDataset& data,
                            const SpectralOptions& opts = {});

}  // namespace btl

#endif  // BTL_SPECTRAL_HPP_
