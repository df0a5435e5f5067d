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

#include "btl/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "btl/errors.hpp"

namespace btl {

ComparisonDataset::ComparisonDataset(int n, std::vector<Edge> edges,
                                     DatasetMeta meta)
    : n_(n), edges_(std::move(edges)), meta_(std::move(meta)) {
  if (n_ < 1) {
    throw std::invalid_argument("dataset: n must be at least 1");
  }
  for (const Edge& e : edges_) {
    if (e.i < 0 || e.j >= n_ || e.i >= e.j) {
      throw std::invalid_argument("dataset: edge needs 0 <= i < j < n");
    }
    if (e.count < 1) {
      throw std::invalid_argument("dataset: edge count must be at least 1");
    }
    if (!std::isfinite(e.ybar)) {
      throw std::invalid_argument("dataset: non-finite win fraction");
    }
  }
}

Adjacency::Adjacency(const ComparisonDataset& data)
    : n_(data.n()),
      edge_count_(static_cast<std::int64_t>(data.edges().size())),
      offsets_(static_cast<std::size_t>(data.n()) + 1, 0) {
  for (const Edge& e : data.edges()) {
    ++offsets_[static_cast<std::size_t>(e.i) + 1];
    ++offsets_[static_cast<std::size_t>(e.j) + 1];
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) {
    offsets_[i] += offsets_[i - 1];
  }
  neighbor_.resize(static_cast<std::size_t>(offsets_.back()));
  ybar_.resize(neighbor_.size());
  std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : data.edges()) {
    const std::size_t ci = static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.i)]++);
    neighbor_[ci] = e.j;
    ybar_[ci] = e.ybar;
    const std::size_t cj = static_cast<std::size_t>(cursor[static_cast<std::size_t>(e.j)]++);
    neighbor_[cj] = e.i;
    ybar_[cj] = 1.0 - e.ybar;
  }
}

std::int64_t Adjacency::max_degree() const {
  std::int64_t best = 0;
  for (int i = 0; i < n_; ++i) {
    best = std::max(best, degree(i));
  }
  return best;
}

bool Adjacency::connected() const {
  if (n_ <= 1) {
    return true;
  }
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : neighbors(v)) {
      if (!seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = 1;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == n_;
}

ValidationReport validate_dataset(const ComparisonDataset& data) {
  ValidationReport report;
  Adjacency adj(data);
  report.connected = adj.connected();
  report.degrees.resize(static_cast<std::size_t>(data.n()));
  for (int i = 0; i < data.n(); ++i) {
    report.degrees[static_cast<std::size_t>(i)] = adj.degree(i);
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(data.edges().size());
  for (const Edge& e : data.edges()) {
    pairs.emplace_back(e.i, e.j);
    if (e.ybar < 0.0 || e.ybar > 1.0) {
      report.findings.push_back("pair (" + std::to_string(e.i) + ", " +
                                std::to_string(e.j) +
                                ") has win fraction outside [0, 1]");
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k] == pairs[k - 1]) {
      report.findings.push_back("pair (" + std::to_string(pairs[k].first) +
                                ", " + std::to_string(pairs[k].second) +
                                ") appears more than once");
    }
  }
  return report;
}

void require_fittable(const ComparisonDataset& data, const Adjacency& adj) {
  for (const Edge& e : data.edges()) {
    if (e.ybar < 0.0 || e.ybar > 1.0) {
      throw Error("dataset: win fraction outside [0, 1] on pair (" +
                  std::to_string(e.i) + ", " + std::to_string(e.j) + ")");
    }
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(data.edges().size());
  for (const Edge& e : data.edges()) {
    pairs.emplace_back(e.i, e.j);
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) {
    throw Error("dataset: duplicate comparison pair");
  }
  if (!adj.connected()) {
    throw DisconnectedGraphError("comparison graph is not connected");
  }
}

}  // namespace btl
