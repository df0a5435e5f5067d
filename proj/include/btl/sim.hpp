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

#ifndef BTL_SIM_HPP_
#define BTL_SIM_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "btl/dataset.hpp"

namespace btl {

enum class MeritLaw {
  kUniform,  // i.i.d. Unif[0, kappa]
  kFixed,    // caller-supplied merits
};

struct SimConfig {
  int n = 0;
  double p = 1.0;        // edge probability, in (0, 1]
  std::int64_t L = 1;    // comparisons per edge
  double kappa = 2.0;    // merit range, >= 0
  MeritLaw merit_law = MeritLaw::kUniform;
  Eigen::VectorXd fixed_merits;  // used only with MeritLaw::kFixed
  std::uint64_t seed = 0;
};

// Merits as drawn (raw) and after centering. Win probabilities depend only
// on differences, so either version generates the same data; the centered
// one is the estimand.
struct MeritSample {
  Eigen::VectorXd raw;
  Eigen::VectorXd centered;
};

MeritSample sample_merits(const SimConfig& cfg);

// Samples an Erdos-Renyi graph: each pair i < j is kept independently with
// probability p. Pairs are visited in lexicographic order, so the draw is
// reproducible from the seed alone. p = 0 yields no edges.
std::vector<std::pair<int, int>> sample_er_graph(int n, double p,
                                                 std::uint64_t seed);

// For each edge (i, j), draws Binomial(L, psi(merit_i - merit_j)) wins for i
// and records the win fraction. Edge order fixes the variate order.
ComparisonDataset sample_comparisons(
    const std::vector<std::pair<int, int>>& edges,
    const Eigen::VectorXd& merits, std::int64_t L, std::uint64_t seed,
    DatasetMeta meta = {});

struct SimDraw {
  MeritSample merits;
  ComparisonDataset data;
};

// Full generative pass: merits, graph, then comparisons, each from its own
// substream of cfg.seed. The dataset records {p, L, kappa, seed}.
SimDraw simulate(const SimConfig& cfg);

}  // namespace btl

#endif  // BTL_SIM_HPP_
