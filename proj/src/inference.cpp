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

#include "btl/inference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "btl/errors.hpp"
#include "btl/logistic.hpp"

namespace btl {
namespace {

// Homogeneous per-edge comparison count, from the edges themselves and
// cross-checked against the metadata when present.
std::int64_t homogeneous_count(const ComparisonDataset& data) {
  std::optional<std::int64_t> count = data.meta().L;
  for (const Edge& e : data.edges()) {
    if (count && e.count != *count) {
      throw Error(
          "per-edge comparison counts are heterogeneous; no variance "
          "formula applies");
    }
    count = e.count;
  }
  if (!count) {
    throw Error("comparison count unavailable: no edges and no metadata");
  }
  return *count;
}

double population_p(const ComparisonDataset& data, std::optional<double> p) {
  if (!p) {
    p = data.meta().p;
  }
  if (!p) {
    throw std::invalid_argument(
        "population variance formula needs p (argument or metadata)");
  }
  if (!(*p > 0.0) || *p > 1.0) {
    throw std::invalid_argument("p must lie in (0, 1]");
  }
  return *p;
}

void check_theta(const Eigen::VectorXd& theta, int n, const char* what) {
  if (theta.size() != n) {
    throw std::invalid_argument(std::string(what) +
                                ": merit vector length does not match n");
  }
}

}  // namespace

double normal_cdf(double x) {
  return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

double normal_quantile(double prob) {
  if (!(prob > 0.0) || !(prob < 1.0)) {
    throw std::domain_error("normal_quantile: prob must lie in (0, 1)");
  }
  // Acklam's rational approximation, then two Halley corrections against
  // the erfc-based CDF; the correction is evaluated in log space so the
  // far tails neither overflow nor divide by a vanished density.
  static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                  -2.759285104469687e+02, 1.383577518672690e+02,
                                  -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                  -1.556989798598866e+02, 6.680131188771972e+01,
                                  -1.328068155288572e+01};
  static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                  -2.400758277161838e+00, -2.549732539343734e+00,
                                  4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                  2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double low = 0.02425;

  double x;
  if (prob < low) {
    const double q = std::sqrt(-2.0 * std::log(prob));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (prob <= 1.0 - low) {
    const double q = prob - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-prob));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q +
          c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }

  constexpr double half_log_2pi = 0.9189385332046727;
  for (int pass = 0; pass < 2; ++pass) {
    const double err = normal_cdf(x) - prob;
    if (err == 0.0) {
      break;
    }
    const double u =
        std::copysign(std::exp(std::log(std::abs(err)) + 0.5 * x * x +
                               half_log_2pi),
                      err);
    x -= u / (1.0 + x * u / 2.0);
  }
  return x;
}

Eigen::VectorXd rho_mle(const Eigen::VectorXd& theta,
                        const ComparisonDataset& data, bool sample_graph,
                        std::optional<double> p) {
  const int n = data.n();
  check_theta(theta, n, "rho_mle");
  Eigen::VectorXd rho(n);
  if (sample_graph) {
    const double count = static_cast<double>(homogeneous_count(data));
    const Adjacency adj(data);
    for (int i = 0; i < n; ++i) {
      if (adj.degree(i) == 0) {
        throw IsolatedItemError(i);
      }
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      const auto neighbors = adj.neighbors(i);
      double s = 0.0;
      for (int j : neighbors) {
        s += psi_prime(theta[i] - theta[j]);
      }
      rho[i] = std::sqrt(count * s);
    }
  } else {
    const double pl = population_p(data, p) *
                      static_cast<double>(homogeneous_count(data));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) {
          s += psi_prime(theta[i] - theta[j]);
        }
      }
      rho[i] = std::sqrt(pl * s);
    }
  }
  return rho;
}

Eigen::VectorXd rho_spectral(const Eigen::VectorXd& theta,
                             const ComparisonDataset& data, bool sample_graph,
                             std::optional<double> p) {
  const int n = data.n();
  check_theta(theta, n, "rho_spectral");
  const Eigen::VectorXd u = theta.array().exp();
  Eigen::VectorXd rho(n);
  if (sample_graph) {
    const double count = static_cast<double>(homogeneous_count(data));
    const Adjacency adj(data);
    for (int i = 0; i < n; ++i) {
      if (adj.degree(i) == 0) {
        throw IsolatedItemError(i);
      }
    }
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      const auto neighbors = adj.neighbors(i);
      double s1 = 0.0;
      double s2 = 0.0;
      for (int j : neighbors) {
        const double w = psi_prime(theta[i] - theta[j]);
        const double scale = u[i] + u[j];
        s1 += scale * w;
        s2 += scale * scale * w;
      }
      rho[i] = std::sqrt(count * s1 * s1 / s2);
    }
  } else {
    const double pl = population_p(data, p) *
                      static_cast<double>(homogeneous_count(data));
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
      double s1 = 0.0;
      double s2 = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j != i) {
          const double w = psi_prime(theta[i] - theta[j]);
          const double scale = u[i] + u[j];
          s1 += scale * w;
          s2 += scale * scale * w;
        }
      }
      rho[i] = std::sqrt(pl * s1 * s1 / s2);
    }
  }
  return rho;
}

Interval ci_target(const Eigen::VectorXd& theta, const Eigen::VectorXd& rho,
                   int target, double alpha) {
  if (theta.size() != rho.size()) {
    throw std::invalid_argument("ci_target: length mismatch");
  }
  if (target < 0 || target >= theta.size()) {
    throw std::invalid_argument("ci_target: target out of range");
  }
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw std::domain_error("ci_target: alpha must lie in (0, 1)");
  }
  if (!(rho[target] > 0.0)) {
    throw std::domain_error("ci_target: rho at target must be positive");
  }
  const double half_width = normal_quantile(1.0 - alpha / 2.0) / rho[target];
  return Interval{theta[target] - half_width, theta[target] + half_width};
}

Eigen::VectorXd simultaneous_half_widths(const Eigen::VectorXd& rho,
                                         double c0) {
  if (rho.size() == 0) {
    throw std::invalid_argument("simultaneous_half_widths: empty rho");
  }
  if (!(c0 >= 0.0)) {
    throw std::domain_error("simultaneous_half_widths: c0 must be >= 0");
  }
  const double n = static_cast<double>(rho.size());
  const double scale = (1.0 + c0) * std::sqrt(2.0 * std::log(n));
  Eigen::VectorXd tau(rho.size());
  for (Eigen::Index i = 0; i < rho.size(); ++i) {
    if (!(rho[i] > 0.0)) {
      throw std::domain_error("simultaneous_half_widths: rho must be positive");
    }
    tau[i] = scale / rho[i];
  }
  return tau;
}

IntervalSet build_interval_set(const Eigen::VectorXd& theta,
                               const Eigen::VectorXd& rho, int target,
                               double alpha, double c0) {
  IntervalSet set;
  set.target = target;
  set.alpha = alpha;
  set.c0 = c0;
  set.target_interval = ci_target(theta, rho, target, alpha);
  const Eigen::VectorXd tau = simultaneous_half_widths(rho, c0);
  set.others.resize(static_cast<std::size_t>(theta.size()));
  for (Eigen::Index i = 0; i < theta.size(); ++i) {
    set.others[static_cast<std::size_t>(i)] =
        Interval{theta[i] - tau[i], theta[i] + tau[i]};
  }
  return set;
}

RankInterval rank_ci(const IntervalSet& set) {
  const int n = static_cast<int>(set.others.size());
  if (set.target < 0 || set.target >= n) {
    throw std::invalid_argument("rank_ci: target out of range");
  }
  RankInterval out;
  for (int i = 0; i < n; ++i) {
    if (i == set.target) {
      continue;
    }
    if (set.others[static_cast<std::size_t>(i)].lo > set.target_interval.hi) {
      ++out.n1;
    } else if (set.others[static_cast<std::size_t>(i)].hi <
               set.target_interval.lo) {
      ++out.n2;
    }
  }
  out.lo = out.n1 + 1;
  out.hi = n - out.n2;
  return out;
}

namespace {

void check_constant_args(const Eigen::VectorXd& theta_star, double p,
                         std::int64_t count) {
  if (theta_star.size() < 2) {
    throw std::invalid_argument("l2 constant: need at least 2 items");
  }
  if (!(p > 0.0) || p > 1.0) {
    throw std::invalid_argument("l2 constant: p must lie in (0, 1]");
  }
  if (count < 1) {
    throw std::invalid_argument("l2 constant: L must be at least 1");
  }
}

}  // namespace

double l2_constant_mle(const Eigen::VectorXd& theta_star, double p,
                       std::int64_t L) {
  check_constant_args(theta_star, p, L);
  const int n = static_cast<int>(theta_star.size());
  const double pl = p * static_cast<double>(L);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) {
        s += psi_prime(theta_star[i] - theta_star[j]);
      }
    }
    total += 1.0 / (pl * s);
  }
  return total;
}

double l2_constant_spectral(const Eigen::VectorXd& theta_star, double p,
                            std::int64_t L) {
  check_constant_args(theta_star, p, L);
  const int n = static_cast<int>(theta_star.size());
  const Eigen::VectorXd u = theta_star.array().exp();
  const double pl = p * static_cast<double>(L);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    double s1 = 0.0;
    double s2 = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i) {
        const double w = psi_prime(theta_star[i] - theta_star[j]);
        const double scale = u[i] + u[j];
        s1 += scale * w;
        s2 += scale * scale * w;
      }
    }
    total += s2 / (pl * s1 * s1);
  }
  return total;
}

}  // namespace btl
