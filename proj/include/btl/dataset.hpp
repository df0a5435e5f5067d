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

#ifndef BTL_DATASET_HPP_
#define BTL_DATASET_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace btl {

// One compared pair. Stored once with i < j; ybar is the fraction of the
// count comparisons won by i, so j's fraction against i is 1 - ybar.
struct Edge {
  int i = 0;
  int j = 0;
  double ybar = 0.0;
  std::int64_t count = 1;
};

// Generation metadata carried alongside synthetic datasets; absent fields
// mean the dataset was ingested from outside.
struct DatasetMeta {
  std::optional<double> p;
  std::optional<std::int64_t> L;
  std::optional<double> kappa;
  std::optional<std::uint64_t> seed;
};

// An immutable pairwise-comparison dataset on items 0..n-1.
class ComparisonDataset {
 public:
  // Requires n >= 1 and, for every edge, 0 <= i < j < n, count >= 1 and
  // finite ybar; violations throw std::invalid_argument. Out-of-range ybar
  // and duplicate pairs are accepted here and reported by validate().
  ComparisonDataset(int n, std::vector<Edge> edges, DatasetMeta meta = {});

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const DatasetMeta& meta() const { return meta_; }

 private:
  int n_;
  std::vector<Edge> edges_;
  DatasetMeta meta_;
};

// Per-item neighbor lists built once from the edge list. Row i pairs each
// neighbor with i's win fraction against it.
class Adjacency {
 public:
  explicit Adjacency(const ComparisonDataset& data);

  int n() const { return n_; }
  std::int64_t degree(int i) const {
    return offsets_[static_cast<std::size_t>(i) + 1] -
           offsets_[static_cast<std::size_t>(i)];
  }
  std::span<const int> neighbors(int i) const {
    return {neighbor_.data() + offsets_[static_cast<std::size_t>(i)],
            static_cast<std::size_t>(degree(i))};
  }
  std::span<const double> win_fractions(int i) const {
    return {ybar_.data() + offsets_[static_cast<std::size_t>(i)],
            static_cast<std::size_t>(degree(i))};
  }
  std::int64_t edge_count() const { return edge_count_; }
  std::int64_t max_degree() const;

  // True when the undirected comparison graph joins all n items (n = 1 is
  // trivially connected).
  bool connected() const;

 private:
  int n_ = 0;
  std::int64_t edge_count_ = 0;
  std::vector<std::int64_t> offsets_;
  std::vector<int> neighbor_;
  std::vector<double> ybar_;
};

// Structural audit of a dataset: connectivity, per-item degrees, and any
// findings (duplicate pairs, win fractions outside [0, 1]).
struct ValidationReport {
  bool connected = false;
  std::vector<std::int64_t> degrees;
  std::vector<std::string> findings;

  bool clean() const { return connected && findings.empty(); }
};

ValidationReport validate_dataset(const ComparisonDataset& data);

// Throws DisconnectedGraphError or Error unless the dataset is clean enough
// to fit: no duplicates, win fractions in [0, 1], connected graph.
void require_fittable(const ComparisonDataset& data, const Adjacency& adj);

}  // namespace btl

#endif  // BTL_DATASET_HPP_
