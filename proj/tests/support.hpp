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

#ifndef BTL_TESTS_SUPPORT_HPP_
#define BTL_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "btl/dataset.hpp"
#include "btl/logistic.hpp"
#include "btl/mle.hpp"
#include "btl/rng.hpp"

namespace btltest {

// Brute-force MLE for n = 3 by nested grid search over the centered
// coordinates (a, b, -a-b). The objective is convex, so each zoom level
// keeps the global minimizer within one grid step.
inline Eigen::VectorXd grid_mle_3(const btl::ComparisonDataset& data) {
  double ca = 0.0;
  double cb = 0.0;
  double radius = 4.0;
  const int half = 20;
  for (int level = 0; level < 7; ++level) {
    const double step = radius / half;
    double best = std::numeric_limits<double>::infinity();
    double best_a = ca;
    double best_b = cb;
    for (int ia = -half; ia <= half; ++ia) {
      for (int ib = -half; ib <= half; ++ib) {
        Eigen::VectorXd theta(3);
        theta << ca + ia * step, cb + ib * step, 0.0;
        theta[2] = -theta[0] - theta[1];
        const double value = btl::neg_log_likelihood(theta, data);
        if (value < best) {
          best = value;
          best_a = theta[0];
          best_b = theta[1];
        }
      }
    }
    ca = best_a;
    cb = best_b;
    radius = 2.0 * step;
  }
  Eigen::VectorXd theta(3);
  theta << ca, cb, -ca - cb;
  return theta;
}

// Complete-graph dataset with win fractions pulled uniformly from
// [margin, 1 - margin].
inline btl::ComparisonDataset random_dataset(int n, btl::Rng& rng,
                                             double margin = 0.05,
                                             std::int64_t count = 1) {
  std::vector<btl::Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.push_back(
          btl::Edge{i, j, rng.uniform(margin, 1.0 - margin), count});
    }
  }
  return btl::ComparisonDataset(n, std::move(edges));
}

// Noiseless dataset: ybar_ij = psi(merit_i - merit_j) on the given edges.
inline btl::ComparisonDataset exact_dataset(
    const Eigen::VectorXd& merits,
    const std::vector<std::pair<int, int>>& edges, std::int64_t count = 1) {
  std::vector<btl::Edge> out;
  out.reserve(edges.size());
  for (const auto& [i, j] : edges) {
    out.push_back(btl::Edge{i, j, btl::psi(merits[i] - merits[j]), count});
  }
  return btl::ComparisonDataset(static_cast<int>(merits.size()),
                                std::move(out));
}

inline std::vector<std::pair<int, int>> complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      edges.emplace_back(i, j);
    }
  }
  return edges;
}

}  // namespace btltest

#endif  // BTL_TESTS_SUPPORT_HPP_
