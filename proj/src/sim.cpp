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

#include "btl/sim.hpp"

#include <cmath>
#include <stdexcept>

#include "btl/logistic.hpp"
#include "btl/rng.hpp"

namespace btl {
namespace {

void check_config(const SimConfig& cfg) {
  if (cfg.n < 1) {
    throw std::invalid_argument("sim: n must be at least 1");
  }
  if (!(cfg.p > 0.0) || cfg.p > 1.0) {
    throw std::invalid_argument("sim: p must lie in (0, 1]");
  }
  if (cfg.L < 1) {
    throw std::invalid_argument("sim: L must be at least 1");
  }
  if (!(cfg.kappa >= 0.0)) {
    throw std::invalid_argument("sim: kappa must be nonnegative");
  }
  if (cfg.merit_law == MeritLaw::kFixed &&
      cfg.fixed_merits.size() != cfg.n) {
    throw std::invalid_argument("sim: fixed merits must have length n");
  }
}

}  // namespace

MeritSample sample_merits(const SimConfig& cfg) {
  check_config(cfg);
  MeritSample out;
  if (cfg.merit_law == MeritLaw::kFixed) {
    out.raw = cfg.fixed_merits;
  } else {
    Rng rng(derive_seed(cfg.seed, 0));
    out.raw.resize(cfg.n);
    for (int i = 0; i < cfg.n; ++i) {
      out.raw[i] = cfg.kappa * rng.uniform01();
    }
  }
  for (int i = 0; i < cfg.n; ++i) {
    if (!std::isfinite(out.raw[i])) {
      throw std::invalid_argument("sim: non-finite merit");
    }
  }
  out.centered = center(out.raw);
  return out;
}

std::vector<std::pair<int, int>> sample_er_graph(int n, double p,
                                                 std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("sim: n must be at least 1");
  }
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("sim: p must lie in [0, 1]");
  }
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

ComparisonDataset sample_comparisons(
    const std::vector<std::pair<int, int>>& edges,
    const Eigen::VectorXd& merits, std::int64_t L, std::uint64_t seed,
    DatasetMeta meta) {
  if (L < 1) {
    throw std::invalid_argument("sim: L must be at least 1");
  }
  const int n = static_cast<int>(merits.size());
  Rng rng(seed);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [i, j] : edges) {
    if (i < 0 || j >= n || i >= j) {
      throw std::invalid_argument("sim: edge needs 0 <= i < j < n");
    }
    const double prob = psi(merits[i] - merits[j]);
    const std::int64_t wins = rng.binomial(L, prob);
    out.push_back(Edge{i, j,
                       static_cast<double>(wins) / static_cast<double>(L), L});
  }
  return ComparisonDataset(n, std::move(out), std::move(meta));
}

SimDraw simulate(const SimConfig& cfg) {
  check_config(cfg);
  MeritSample merits = sample_merits(cfg);
  const std::vector<std::pair<int, int>> graph =
      sample_er_graph(cfg.n, cfg.p, derive_seed(cfg.seed, 1));
  DatasetMeta meta;
  meta.p = cfg.p;
  meta.L = cfg.L;
  meta.kappa = cfg.kappa;
  meta.seed = cfg.seed;
  ComparisonDataset data = sample_comparisons(
      graph, merits.raw, cfg.L, derive_seed(cfg.seed, 2), std::move(meta));
  return SimDraw{std::move(merits), std::move(data)};
}

}  // namespace btl
