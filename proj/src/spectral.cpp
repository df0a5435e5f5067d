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

#include "btl/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "btl/errors.hpp"
#include "btl/logistic.hpp"
#include "btl/mle.hpp"

namespace btl {

namespace {
constexpr double kMassSlack = 1e-12;
constexpr double kFloorScale = 1e-12;
}  // namespace

TransitionMatrix::TransitionMatrix(const Adjacency& adj, double d)
    : adj_(&adj), n_(adj.n()), d_(d) {
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw std::invalid_argument("transition matrix: d must be positive");
  }
  offset_.resize(static_cast<std::size_t>(n_) + 1, 0);
  for (int i = 0; i < n_; ++i) {
    offset_[static_cast<std::size_t>(i) + 1] =
        offset_[static_cast<std::size_t>(i)] + adj.degree(i);
  }
  weight_in_.resize(static_cast<std::size_t>(offset_.back()));
  diag_.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    const auto fractions = adj.win_fractions(i);
    double* w = weight_in_.data() + offset_[static_cast<std::size_t>(i)];
    double out_mass = 0.0;
    for (std::size_t k = 0; k < fractions.size(); ++k) {
      // Incoming weight: neighbors move to i when i beats them.
      w[k] = fractions[k] / d_;
      // Outgoing mass: i moves to neighbors that beat it.
      out_mass += (1.0 - fractions[k]) / d_;
    }
    if (out_mass > 1.0 + kMassSlack) {
      throw DegenerateNormalizationError(i, out_mass * d_, d_);
    }
    diag_[static_cast<std::size_t>(i)] = std::max(0.0, 1.0 - out_mass);
  }
}

Eigen::MatrixXd TransitionMatrix::dense() const {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n_, n_);
  for (int j = 0; j < n_; ++j) {
    const auto from = sources(j);
    const auto w = incoming_weights(j);
    for (std::size_t k = 0; k < from.size(); ++k) {
      p(from[k], j) = w[k];
    }
    p(j, j) = diagonal(j);
  }
  return p;
}

double default_normalization(const ComparisonDataset& data,
                             const Adjacency& adj) {
  if (data.meta().p) {
    return 2.0 * data.n() * *data.meta().p;
  }
  return 2.0 * static_cast<double>(adj.max_degree());
}

StationaryResult stationary(const TransitionMatrix& p,
                            const StationaryOptions& opts) {
  if (!(opts.tol > 0.0)) {
    throw std::invalid_argument("stationary: tol must be positive");
  }
  const int n = p.n();
  Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / n);
  Eigen::VectorXd next(n);

  auto sweep = [&](const Eigen::VectorXd& from, Eigen::VectorXd& to) {
#pragma omp parallel for schedule(static)
    for (int j = 0; j < n; ++j) {
      const auto sources = p.sources(j);
      const auto weights = p.incoming_weights(j);
      double acc = from[j] * p.diagonal(j);
      for (std::size_t k = 0; k < sources.size(); ++k) {
        acc += from[sources[k]] * weights[k];
      }
      to[j] = acc;
    }
  };

  StationaryResult out;
  bool hit_tol = false;
  double diff = 0.0;
  for (std::int64_t t = 0; t < opts.max_iters; ++t) {
    sweep(pi, next);
    next /= next.sum();
    diff = (next - pi).lpNorm<1>();
    pi.swap(next);
    out.iterations = t + 1;
    if (diff <= opts.tol) {
      hit_tol = true;
      break;
    }
  }
  if (!hit_tol) {
    throw ConvergenceError("stationary: power iteration exhausted its budget",
                           diff);
  }

  sweep(pi, next);
  out.residual = (next - pi).lpNorm<1>();
  if (pi.minCoeff() < kFloorScale / n) {
    throw ReducibleChainError(
        "stationary distribution vanishes on some item");
  }
  out.pi = std::move(pi);
  return out;
}

Eigen::VectorXd merits_from_stationary(const Eigen::VectorXd& pi) {
  if (pi.size() == 0) {
    throw std::invalid_argument("merits_from_stationary: empty vector");
  }
  if (pi.minCoeff() <= 0.0) {
    throw std::invalid_argument(
        "merits_from_stationary: entries must be positive");
  }
  return center(pi.array().log().matrix());
}

EstimateReport fit_spectral(const ComparisonDataset& data,
                            const SpectralOptions& opts) {
  const Adjacency adj(data);
  require_fittable(data, adj);
  const int n = data.n();

  EstimateReport report;
  if (n == 1) {
    report.theta = Eigen::VectorXd::Zero(1);
    report.converged = true;
    report.neg_log_lik = neg_log_likelihood(report.theta, data);
    return report;
  }

  for (int i = 0; i < n; ++i) {
    const auto fractions = adj.win_fractions(i);
    double wins = 0.0;
    double losses = 0.0;
    for (double f : fractions) {
      wins += f;
      losses += 1.0 - f;
    }
    if (wins == 0.0) {
      throw ReducibleChainError("item " + std::to_string(i) +
                                " never wins; chain is reducible");
    }
    if (losses == 0.0) {
      throw ReducibleChainError("item " + std::to_string(i) +
                                " never loses; chain is reducible");
    }
  }

  const double d = opts.d ? *opts.d : default_normalization(data, adj);
  const TransitionMatrix p(adj, d);
  StationaryResult st = stationary(p, opts.stationary);

  report.theta = merits_from_stationary(st.pi);
  report.iterations = static_cast<int>(st.iterations);
  report.residual = st.residual;
  report.converged = true;
  report.neg_log_lik = neg_log_likelihood(report.theta, data);
  return report;
}

}  // namespace btl
