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

#ifndef BTL_RNG_HPP_
#define BTL_RNG_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>

namespace btl {

// splitmix64 finalizer; used to spread seeds for independent substreams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed for the index-th substream of a master seed. Distinct (master, index)
// pairs give streams that do not collide in practice.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(splitmix64(master) ^ splitmix64(index + 0x1234567887654321ULL));
}

// mt19937_64 with hand-rolled variate transforms. std::uniform_real_distribution
// and friends are not bit-identical across standard libraries; these are.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on [lo, hi).
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  bool bernoulli(double prob) {
    if (prob < 0.0 || prob > 1.0) {
      throw std::domain_error("bernoulli: probability outside [0, 1]");
    }
    return uniform01() < prob;
  }

  // Sum of `trials` Bernoulli(prob) draws. Always consumes `trials` variates,
  // so the stream position does not depend on the outcomes.
  std::int64_t binomial(std::int64_t trials, double prob) {
    if (trials < 0) {
      throw std::domain_error("binomial: negative trial count");
    }
    std::int64_t wins = 0;
    for (std::int64_t t = 0; t < trials; ++t) {
      wins += bernoulli(prob) ? 1 : 0;
    }
    return wins;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace btl

#endif  // BTL_RNG_HPP_
