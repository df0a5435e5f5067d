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

// Benchmarks comparing the OpenMP kernels against the serial reference
// implementations on p = (log n)^3 / n graphs.

#include <cmath>
#include <map>
#include <memory>

#include <benchmark/benchmark.h>
#include <Eigen/Core>

#include "btl/dataset.hpp"
#include "btl/expansion.hpp"
#include "btl/mle.hpp"
#include "btl/reference.hpp"
#include "btl/rng.hpp"
#include "btl/sim.hpp"
#include "btl/spectral.hpp"

namespace {

struct Instance {
  btl::ComparisonDataset data;
  btl::Adjacency adj;
  btl::TransitionMatrix transition;
  Eigen::VectorXd theta;

  explicit Instance(int n)
      : Instance(btl::simulate(btl::SimConfig{
            n, std::min(1.0, std::pow(std::log(n), 3.0) / n), 2, 2.0,
            btl::MeritLaw::kUniform, {}, 42})) {}

  explicit Instance(btl::SimDraw draw)
      : data(std::move(draw.data)),
        adj(data),
        transition(adj, btl::default_normalization(data, adj)),
        theta(std::move(draw.merits.centered)) {}
};

// The transition matrix points at the adjacency, so instances are pinned
// on the heap rather than moved into the map.
const Instance& instance(int n) {
  static std::map<int, std::unique_ptr<Instance>> cache;
  std::unique_ptr<Instance>& slot = cache[n];
  if (!slot) {
    slot = std::make_unique<Instance>(n);
  }
  return *slot;
}

void BM_NllParallel(benchmark::State& state) {
  const Instance& inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(btl::neg_log_likelihood(inst.theta, inst.data));
  }
}

void BM_NllSerial(benchmark::State& state) {
  const Instance& inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        btl::reference::neg_log_likelihood(inst.theta, inst.data));
  }
}

void BM_GradientParallel(benchmark::State& state) {
  const Instance& inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(btl::gradient(inst.theta, inst.data));
  }
}

void BM_GradientSerial(benchmark::State& state) {
  const Instance& inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        btl::reference::gradient(inst.theta, inst.data));
  }
}

void BM_HessianParallel(benchmark::State& state) {
  const Instance& inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(btl::hessian(inst.theta, inst.data));
  }
}

void BM_HessianSerial(benchmark::State& state) {
  const Instance& inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        btl::reference::hessian(inst.theta, inst.data));
  }
}

void BM_StationaryParallel(benchmark::State& state) {
  const Instance& inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(btl::stationary(inst.transition).pi);
  }
}

// Serial power iteration assembled from the reference sweep, run to the
// same l1 tolerance as btl::stationary.
void BM_StationarySerial(benchmark::State& state) {
  const Instance& inst = instance(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / n);
    for (std::int64_t it = 0; it < 1000000; ++it) {
      Eigen::VectorXd next = btl::reference::power_sweep(inst.transition, pi);
      const double change = (next - pi).lpNorm<1>();
      pi = std::move(next);
      if (change < 1e-13) {
        break;
      }
    }
    benchmark::DoNotOptimize(pi);
  }
}

void BM_MleMainParallel(benchmark::State& state) {
  const Instance& inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(btl::mle_main_term(inst.data, inst.theta));
  }
}

void BM_MleMainSerial(benchmark::State& state) {
  const Instance& inst = instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        btl::reference::mle_main_term(inst.data, inst.theta));
  }
}

BENCHMARK(BM_NllParallel)->Arg(200)->Arg(1000)->Arg(3000);
BENCHMARK(BM_NllSerial)->Arg(200)->Arg(1000)->Arg(3000);
BENCHMARK(BM_GradientParallel)->Arg(200)->Arg(1000)->Arg(3000);
BENCHMARK(BM_GradientSerial)->Arg(200)->Arg(1000)->Arg(3000);
BENCHMARK(BM_HessianParallel)->Arg(200)->Arg(1000)->Arg(3000);
BENCHMARK(BM_HessianSerial)->Arg(200)->Arg(1000)->Arg(3000);
BENCHMARK(BM_StationaryParallel)->Arg(200)->Arg(1000)->Arg(3000);
BENCHMARK(BM_StationarySerial)->Arg(200)->Arg(1000)->Arg(3000);
BENCHMARK(BM_MleMainParallel)->Arg(200)->Arg(1000)->Arg(3000);
BENCHMARK(BM_MleMainSerial)->Arg(200)->Arg(1000)->Arg(3000);

}  // namespace

BENCHMARK_MAIN();
