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

#ifndef BTL_PARALLEL_HPP_
#define BTL_PARALLEL_HPP_

#include <algorithm>
#include <cstdint>
#include <vector>

namespace btl {

inline constexpr std::int64_t kReductionBlock = 4096;

// Sum of term(k) over k in [0, count). Partial sums are formed over
// fixed-size blocks and combined in block order, so the result is
// bit-identical for any number of OpenMP threads, including one.
template <class Term>
double block_sum(std::int64_t count, Term&& term) {
  const std::int64_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(static_cast<std::size_t>(blocks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < blocks; ++b) {
    const std::int64_t lo = b * kReductionBlock;
    const std::int64_t hi = std::min(count, lo + kReductionBlock);
    double acc = 0.0;
    for (std::int64_t k = lo; k < hi; ++k) {
      acc += term(k);
    }
    partial[static_cast<std::size_t>(b)] = acc;
  }
  double total = 0.0;
  for (std::int64_t b = 0; b < blocks; ++b) {
    total += partial[static_cast<std::size_t>(b)];
  }
  return total;
}

}  // namespace btl

#endif  // BTL_PARALLEL_HPP_
