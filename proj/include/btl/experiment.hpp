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

#ifndef BTL_EXPERIMENT_HPP_
#define BTL_EXPERIMENT_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "json.hpp"

#include "btl/sim.hpp"

namespace btl {

enum class ExperimentKind { kQq, kRisk, kCoverage, kExpansion };
enum class EstimatorKind { kMle, kSpectral };

std::string to_string(ExperimentKind kind);
std::string to_string(EstimatorKind estimator);

// Edge probability as a function of n: either a literal value or the
// sparse-regime rule p = (log n)^exponent / n, capped at 1.
struct PRule {
  std::optional<double> literal;
  double exponent = 3.0;

  double operator()(int n) const;

  static PRule parse(const std::string& text);  // "polylog:3" or a number
  std::string str() const;
};

// Experiment description; the grid is the cross product of n and L with p
// given by the rule. See docs/experiment-config.md for the JSON schema.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::kQq;
  std::vector<int> n;
  PRule p_rule;
  std::vector<std::int64_t> L = {1};
  double kappa = 2.0;
  MeritLaw merit_law = MeritLaw::kUniform;
  Eigen::VectorXd fixed_merits;
  int reps = 1;
  double alpha = 0.05;
  double c0 = 0.1;
  int target = 0;
  std::vector<EstimatorKind> estimators = {EstimatorKind::kMle,
                                           EstimatorKind::kSpectral};
  std::uint64_t seed = 0;
  std::string output_dir = ".";
  bool keep_data = false;
};

// Throws ConfigError on missing or ill-typed fields.
ExperimentConfig parse_experiment_config(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

// One table row; rep = -1 marks per-grid-point aggregate rows.
struct TableRow {
  int n = 0;
  double p = 0.0;
  std::int64_t L = 1;
  int rep = -1;
  std::string estimator;
  std::string metric;
  double value = 0.0;
};

struct ExperimentResult {
  std::vector<TableRow> rows;
  nlohmann::json manifest;
};

// Writes rows as RFC-4180 CSV with header n,p,L,rep,estimator,metric,value.
void write_table_csv(const std::vector<TableRow>& rows, std::ostream& out);
std::string table_to_csv(const std::vector<TableRow>& rows);

// Runs the experiment the config describes. Replications are independent
// work items; a failed replication contributes a single "failed" row for
// the failing estimator and is excluded from aggregates. The rows are a
// pure function of the config (worker count does not matter).
ExperimentResult run_experiment(const ExperimentConfig& cfg);

// Kind-checked entry points.
ExperimentResult run_qq(const ExperimentConfig& cfg);
ExperimentResult run_risk(const ExperimentConfig& cfg);
ExperimentResult run_coverage(const ExperimentConfig& cfg);
ExperimentResult run_expansion(const ExperimentConfig& cfg);

// Writes <kind>.csv and <kind>_manifest.json under cfg.output_dir.
// Returns the CSV path.
std::filesystem::path write_experiment_output(const ExperimentConfig& cfg,
                                              const ExperimentResult& result);

// Kolmogorov-Smirnov distance to N(0, 1) with the midpoint convention:
// max_i |Phi(x_(i)) - (i - 1/2)/m|.
double ks_distance_normal(std::vector<double> values);

// Quantile with linear interpolation between order statistics (the common
// "type 7" rule); `sorted` must be ascending and nonempty, prob in [0, 1].
double quantile_sorted(const std::vector<double>& sorted, double prob);

}  // namespace btl

#endif  // BTL_EXPERIMENT_HPP_
