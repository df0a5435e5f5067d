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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <json.hpp>

#include "btl/errors.hpp"
#include "btl/experiment.hpp"
#include "btl/inference.hpp"
#include "btl/io.hpp"
#include "btl/mle.hpp"
#include "btl/rng.hpp"
#include "btl/sim.hpp"
#include "btl/version.hpp"

namespace {

namespace fs = std::filesystem;

std::vector<double> metric_values(const std::vector<btl::TableRow>& rows,
                                  const std::string& estimator,
                                  const std::string& metric,
                                  bool aggregates = false) {
  std::vector<double> out;
  for (const btl::TableRow& r : rows) {
    if (r.estimator == estimator && r.metric == metric &&
        (aggregates ? r.rep == -1 : r.rep >= 0)) {
      out.push_back(r.value);
    }
  }
  return out;
}

double single_aggregate(const std::vector<btl::TableRow>& rows,
                        const std::string& estimator,
                        const std::string& metric) {
  const std::vector<double> values = metric_values(rows, estimator, metric,
                                                   true);
  REQUIRE(values.size() == 1);
  return values.front();
}

btl::ExperimentConfig expansion_config() {
  btl::ExperimentConfig cfg;
  cfg.kind = btl::ExperimentKind::kExpansion;
  cfg.n = {25};
  cfg.p_rule.literal = 0.5;
  cfg.L = {1};
  cfg.reps = 4;
  cfg.seed = 31;
  return cfg;
}

}  // namespace

TEST_CASE("PRule parses literals and polylog rules") {
  const btl::PRule literal = btl::PRule::parse("0.25");
  REQUIRE(literal.literal.has_value());
  CHECK(*literal.literal == 0.25);
  CHECK(literal(10) == 0.25);
  CHECK(literal(100000) == 0.25);
  CHECK(literal.str() == "0.25");

  const btl::PRule polylog = btl::PRule::parse("polylog:3.5");
  CHECK_FALSE(polylog.literal.has_value());
  CHECK(polylog.exponent == 3.5);
  CHECK(polylog(1000) ==
        doctest::Approx(0.8663219175027727).epsilon(1e-15));
  CHECK(polylog.str() == "polylog:3.5");

  const btl::PRule cubed = btl::PRule::parse("polylog:3");
  CHECK(cubed(50) == 1.0);  // (log 50)^3 / 50 exceeds 1 and is capped

  CHECK(btl::PRule::parse("1").literal == 1.0);
}

TEST_CASE("PRule rejects malformed rules and tiny n") {
  for (const char* bad : {"banana", "0", "-0.5", "1.5", "polylog:",
                          "polylog:0", "polylog:-2", "polylog:abc", "", "0.5x"}) {
    CHECK_THROWS_AS(btl::PRule::parse(bad), btl::ConfigError);
  }
  const btl::PRule polylog = btl::PRule::parse("polylog:3");
  CHECK_THROWS_AS(polylog(1), btl::ConfigError);
}

TEST_CASE("experiment config parses defaults and round-trips") {
  const nlohmann::json minimal = {
      {"kind", "risk"}, {"n", 30}, {"p", 0.4}, {"reps", 5}};
  const btl::ExperimentConfig cfg = btl::parse_experiment_config(minimal);
  CHECK(cfg.kind == btl::ExperimentKind::kRisk);
  REQUIRE(cfg.n.size() == 1);
  CHECK(cfg.n[0] == 30);
  CHECK(cfg.p_rule.literal == 0.4);
  REQUIRE(cfg.L.size() == 1);
  CHECK(cfg.L[0] == 1);
  CHECK(cfg.kappa == 2.0);
  CHECK(cfg.merit_law == btl::MeritLaw::kUniform);
  CHECK(cfg.reps == 5);
  CHECK(cfg.alpha == 0.05);
  CHECK(cfg.c0 == 0.1);
  CHECK(cfg.target == 0);
  REQUIRE(cfg.estimators.size() == 2);
  CHECK(cfg.estimators[0] == btl::EstimatorKind::kMle);
  CHECK(cfg.estimators[1] == btl::EstimatorKind::kSpectral);
  CHECK(cfg.seed == 0);
  CHECK(cfg.output_dir == ".");
  CHECK_FALSE(cfg.keep_data);

  const btl::ExperimentConfig back =
      btl::parse_experiment_config(btl::config_to_json(cfg));
  CHECK(back.kind == cfg.kind);
  CHECK(back.n == cfg.n);
  CHECK(back.p_rule.str() == cfg.p_rule.str());
  CHECK(back.L == cfg.L);
  CHECK(back.reps == cfg.reps);
  CHECK(back.seed == cfg.seed);
}

TEST_CASE("experiment config parses every field") {
  const nlohmann::json full = {{"kind", "coverage"},
                               {"n", {100, 200}},
                               {"p", "polylog:3"},
                               {"L", {1, 4}},
                               {"kappa", 1.5},
                               {"reps", 7},
                               {"alpha", 0.1},
                               {"c0", 0.2},
                               {"target", 3},
                               {"estimators", {"spectral"}},
                               {"seed", 99},
                               {"output_dir", "out"},
                               {"keep_data", true}};
  const btl::ExperimentConfig cfg = btl::parse_experiment_config(full);
  CHECK(cfg.kind == btl::ExperimentKind::kCoverage);
  CHECK(cfg.n == std::vector<int>{100, 200});
  CHECK_FALSE(cfg.p_rule.literal.has_value());
  CHECK(cfg.p_rule.exponent == 3.0);
  CHECK(cfg.L == std::vector<std::int64_t>{1, 4});
  CHECK(cfg.kappa == 1.5);
  CHECK(cfg.reps == 7);
  CHECK(cfg.alpha == 0.1);
  CHECK(cfg.c0 == 0.2);
  CHECK(cfg.target == 3);
  REQUIRE(cfg.estimators.size() == 1);
  CHECK(cfg.estimators[0] == btl::EstimatorKind::kSpectral);
  CHECK(cfg.seed == 99);
  CHECK(cfg.output_dir == "out");
  CHECK(cfg.keep_data);
}

TEST_CASE("experiment config parses fixed merits") {
  const nlohmann::json fixed = {{"kind", "risk"},
                                {"n", 3},
                                {"p", 1.0},
                                {"reps", 2},
                                {"merit_law", "fixed"},
                                {"merits", {0.5, 0.0, -0.5}}};
  const btl::ExperimentConfig cfg = btl::parse_experiment_config(fixed);
  CHECK(cfg.merit_law == btl::MeritLaw::kFixed);
  REQUIRE(cfg.fixed_merits.size() == 3);
  CHECK(cfg.fixed_merits[0] == 0.5);
}

TEST_CASE("experiment config rejects bad input") {
  const nlohmann::json base = {
      {"kind", "risk"}, {"n", 30}, {"p", 0.4}, {"reps", 5}};
  auto with = [&](const char* key, const nlohmann::json& value) {
    nlohmann::json j = base;
    j[key] = value;
    return j;
  };
  auto without = [&](const char* key) {
    nlohmann::json j = base;
    j.erase(key);
    return j;
  };

  for (const char* key : {"kind", "n", "p", "reps"}) {
    CHECK_THROWS_AS(btl::parse_experiment_config(without(key)),
                    btl::ConfigError);
  }
  CHECK_THROWS_AS(btl::parse_experiment_config(with("kind", "qqq")),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("n", 0)),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("n", nlohmann::json::array())),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("p", 0.0)),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("p", 1.5)),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("p", true)),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("L", 0)),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("reps", 0)),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("alpha", 0.0)),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("alpha", 1.0)),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("c0", -0.1)),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("target", -1)),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("kappa", -1.0)),
                  btl::ConfigError);
  CHECK_THROWS_AS(
      btl::parse_experiment_config(with("estimators", nlohmann::json::array())),
      btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("estimators", {"ols"})),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("merit_law", "fixed")),
                  btl::ConfigError);
  CHECK_THROWS_AS(btl::parse_experiment_config(with("merit_law", "cauchy")),
                  btl::ConfigError);

  nlohmann::json mismatched = base;
  mismatched["merit_law"] = "fixed";
  mismatched["merits"] = {0.1, 0.2};
  CHECK_THROWS_AS(btl::parse_experiment_config(mismatched),
                  btl::ConfigError);
}

TEST_CASE("ks_distance_normal matches hand values") {
  CHECK(btl::ks_distance_normal({0.0}) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(btl::ks_distance_normal({-10.0, 10.0}) ==
        doctest::Approx(0.25).epsilon(1e-9));

  // A sample sitting exactly on the midpoint grid has zero distance.
  std::vector<double> perfect;
  const int m = 17;
  for (int i = 1; i <= m; ++i) {
    perfect.push_back(btl::normal_quantile((i - 0.5) / m));
  }
  CHECK(btl::ks_distance_normal(perfect) < 1e-9);

  std::vector<double> shifted = perfect;
  for (double& x : shifted) {
    x += 100.0;
  }
  CHECK(btl::ks_distance_normal(shifted) ==
        doctest::Approx(1.0 - 0.5 / m).epsilon(1e-12));

  CHECK_THROWS_AS(btl::ks_distance_normal({}), std::domain_error);
}

TEST_CASE("quantile_sorted implements the type-7 rule") {
  const std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  CHECK(btl::quantile_sorted(v, 0.0) == 1.0);
  CHECK(btl::quantile_sorted(v, 1.0) == 4.0);
  CHECK(btl::quantile_sorted(v, 0.5) == 2.5);
  CHECK(btl::quantile_sorted(v, 1.0 / 3.0) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK(btl::quantile_sorted(v, 0.25) == 1.75);
  CHECK(btl::quantile_sorted({7.5}, 0.9) == 7.5);
  CHECK_THROWS_AS(btl::quantile_sorted({}, 0.5), std::domain_error);
  CHECK_THROWS_AS(btl::quantile_sorted(v, -0.1), std::domain_error);
  CHECK_THROWS_AS(btl::quantile_sorted(v, 1.1), std::domain_error);
}

TEST_CASE("run_experiment emits the expected expansion table shape") {
  btl::ExperimentConfig cfg = expansion_config();
  cfg.n = {20, 30};
  // L large enough that no replication fails by a one-sided record.
  cfg.L = {3, 6};
  cfg.reps = 3;
  const btl::ExperimentResult result = btl::run_expansion(cfg);

  // Per grid point: 3 reps x 2 estimators x 2 metrics, plus per estimator
  // the two medians and the exclusion count.
  CHECK(result.rows.size() == 4 * (12 + 6));
  for (const btl::TableRow& r : result.rows) {
    CHECK((r.n == 20 || r.n == 30));
    CHECK(r.p == 0.5);
    CHECK((r.L == 3 || r.L == 6));
    CHECK(r.rep >= -1);
    CHECK(r.rep < 3);
    CHECK((r.estimator == "mle" || r.estimator == "spectral"));
  }
  CHECK(result.manifest.at("version") == btl::kVersion);
  CHECK(result.manifest.at("kind") == "expansion");
  CHECK(result.manifest.at("row_count") == result.rows.size());
  CHECK(result.manifest.at("wall_seconds").get<double>() >= 0.0);
  CHECK(result.manifest.at("exclusions").size() == 4 * 2);
  CHECK(result.manifest.at("config").at("seed") == 31);
}

TEST_CASE("run_experiment is invariant to the worker count") {
  btl::ExperimentConfig cfg = expansion_config();
  cfg.reps = 6;
  cfg.estimators = {btl::EstimatorKind::kMle, btl::EstimatorKind::kSpectral};

#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const std::string serial = btl::table_to_csv(btl::run_expansion(cfg).rows);
  omp_set_num_threads(4);
  const std::string parallel = btl::table_to_csv(btl::run_expansion(cfg).rows);
  omp_set_num_threads(saved);
  CHECK(serial == parallel);
#else
  const std::string once = btl::table_to_csv(btl::run_expansion(cfg).rows);
  const std::string twice = btl::table_to_csv(btl::run_expansion(cfg).rows);
  CHECK(once == twice);
#endif
}

TEST_CASE("grid points derive independent seed streams") {
  btl::ExperimentConfig small = expansion_config();
  small.n = {25};
  btl::ExperimentConfig wide = expansion_config();
  wide.n = {25, 40};

  const btl::ExperimentResult a = btl::run_expansion(small);
  const btl::ExperimentResult b = btl::run_expansion(wide);
  std::vector<btl::TableRow> b_first;
  for (const btl::TableRow& r : b.rows) {
    if (r.n == 25) {
      b_first.push_back(r);
    }
  }
  CHECK(btl::table_to_csv(a.rows) == btl::table_to_csv(b_first));
}

TEST_CASE("qq experiment aggregates quantiles and KS distance") {
  btl::ExperimentConfig cfg;
  cfg.kind = btl::ExperimentKind::kQq;
  cfg.n = {40};
  cfg.p_rule.literal = 0.6;
  cfg.L = {3};
  cfg.reps = 60;
  cfg.target = 1;
  cfg.seed = 37;
  const btl::ExperimentResult result = btl::run_qq(cfg);

  for (const std::string est : {"mle", "spectral"}) {
    std::vector<double> errors = metric_values(result.rows, est, "std_error");
    REQUIRE(errors.size() == 60);
    std::sort(errors.begin(), errors.end());
    CHECK(single_aggregate(result.rows, est, "quantile_50") ==
          btl::quantile_sorted(errors, 0.50));
    CHECK(single_aggregate(result.rows, est, "quantile_01") ==
          btl::quantile_sorted(errors, 0.01));
    CHECK(single_aggregate(result.rows, est, "quantile_99") ==
          btl::quantile_sorted(errors, 0.99));

    std::vector<double> unsorted = metric_values(result.rows, est,
                                                 "std_error");
    CHECK(single_aggregate(result.rows, est, "ks_normal") ==
          btl::ks_distance_normal(unsorted));
    CHECK(single_aggregate(result.rows, est, "ks_normal") < 0.3);
    CHECK(single_aggregate(result.rows, est, "excluded") == 0.0);
  }
}

TEST_CASE("risk experiment tracks the theoretical constant") {
  btl::ExperimentConfig cfg;
  cfg.kind = btl::ExperimentKind::kRisk;
  cfg.n = {60};
  cfg.p_rule.literal = 0.8;
  cfg.L = {500};
  cfg.reps = 10;
  cfg.merit_law = btl::MeritLaw::kFixed;
  cfg.fixed_merits = Eigen::VectorXd::Zero(60);
  cfg.seed = 41;
  const btl::ExperimentResult result = btl::run_risk(cfg);

  const double expected_constant = 4.0 * 60 / (59.0 * 0.8 * 500.0);
  for (const std::string est : {"mle", "spectral"}) {
    for (double value : metric_values(result.rows, est, "theory_constant")) {
      CHECK(value == doctest::Approx(expected_constant).epsilon(1e-12));
    }
    const double mean_sq = single_aggregate(result.rows, est,
                                            "mean_sq_l2_error");
    const double mean_theory = single_aggregate(result.rows, est,
                                                "mean_theory_constant");
    const double ratio = single_aggregate(result.rows, est, "risk_ratio");
    CHECK(ratio == doctest::Approx(mean_sq / mean_theory).epsilon(1e-12));
    CHECK(mean_theory == doctest::Approx(expected_constant).epsilon(1e-12));
    CHECK(ratio > 0.6);
    CHECK(ratio < 1.6);
  }
}

TEST_CASE("coverage experiment behaves at equal merits") {
  btl::ExperimentConfig cfg;
  cfg.kind = btl::ExperimentKind::kCoverage;
  cfg.n = {50};
  cfg.p_rule.literal = 0.8;
  cfg.L = {50};
  cfg.reps = 60;
  cfg.alpha = 0.5;
  cfg.c0 = 0.1;
  cfg.target = 4;
  cfg.merit_law = btl::MeritLaw::kFixed;
  cfg.fixed_merits = Eigen::VectorXd::Zero(50);
  cfg.n = {50};
  cfg.seed = 43;
  const btl::ExperimentResult result = btl::run_coverage(cfg);

  for (const std::string est : {"mle", "spectral"}) {
    // The guarantee is one-sided at level 1 - alpha; with alpha = 0.5 the
    // narrow target interval occasionally lets an extreme item separate.
    const double rank_cov = single_aggregate(result.rows, est,
                                             "rank_coverage");
    CHECK(rank_cov >= 0.5);
    for (double value : metric_values(result.rows, est, "rank_covered")) {
      CHECK((value == 0.0 || value == 1.0));
    }
    for (double value : metric_values(result.rows, est, "rank_ci_length")) {
      CHECK(value >= 1.0);
      CHECK(value <= 50.0);
    }
    for (double value : metric_values(result.rows, est, "merit_covered")) {
      CHECK((value == 0.0 || value == 1.0));
    }
    const double merit_cov = single_aggregate(result.rows, est,
                                              "merit_coverage");
    // alpha = 0.5 over 60 reps: 3 sigma around 0.5 is about +-0.20.
    CHECK(merit_cov > 0.28);
    CHECK(merit_cov < 0.72);
    CHECK(single_aggregate(result.rows, est, "mean_target_ci_length") > 0.0);
    for (double value :
         metric_values(result.rows, est, "mean_simultaneous_length")) {
      CHECK(value > 0.0);
    }
  }
}

TEST_CASE("failed replications are flagged, counted, and excluded") {
  // Six items spaced 30 apart make every comparison decisive: the spectral
  // chain is reducible and the likelihood iterates pass the divergence cap.
  btl::ExperimentConfig cfg;
  cfg.kind = btl::ExperimentKind::kRisk;
  cfg.n = {6};
  cfg.p_rule.literal = 1.0;
  cfg.L = {1};
  cfg.reps = 4;
  cfg.merit_law = btl::MeritLaw::kFixed;
  cfg.fixed_merits = Eigen::VectorXd(6);
  cfg.fixed_merits << -75.0, -45.0, -15.0, 15.0, 45.0, 75.0;
  cfg.seed = 47;
  const btl::ExperimentResult result = btl::run_risk(cfg);

  for (const std::string est : {"mle", "spectral"}) {
    const std::vector<double> failed = metric_values(result.rows, est,
                                                     "failed");
    REQUIRE(failed.size() == 4);
    for (double value : failed) {
      CHECK(value == 1.0);
    }
    CHECK(metric_values(result.rows, est, "sq_l2_error").empty());
    CHECK(metric_values(result.rows, est, "mean_sq_l2_error", true).empty());
    CHECK(single_aggregate(result.rows, est, "excluded") == 4.0);
  }
  for (const auto& entry : result.manifest.at("exclusions")) {
    CHECK(entry.at("excluded") == 4);
  }
}

TEST_CASE("run_experiment validates grids and dispatch") {
  btl::ExperimentConfig cfg = expansion_config();
  cfg.n.clear();
  CHECK_THROWS_AS(btl::run_experiment(cfg), btl::ConfigError);

  cfg = expansion_config();
  cfg.reps = 0;
  CHECK_THROWS_AS(btl::run_experiment(cfg), btl::ConfigError);

  cfg = expansion_config();
  cfg.estimators.clear();
  CHECK_THROWS_AS(btl::run_experiment(cfg), btl::ConfigError);

  cfg = expansion_config();
  cfg.kind = btl::ExperimentKind::kQq;
  cfg.target = 25;
  CHECK_THROWS_AS(btl::run_experiment(cfg), btl::ConfigError);

  cfg = expansion_config();
  CHECK_THROWS_AS(btl::run_qq(cfg), btl::ConfigError);
  CHECK_THROWS_AS(btl::run_risk(cfg), btl::ConfigError);
  CHECK_THROWS_AS(btl::run_coverage(cfg), btl::ConfigError);
  CHECK_NOTHROW(btl::run_expansion(cfg));
}

TEST_CASE("write_experiment_output writes the table and manifest") {
  const fs::path dir = fs::temp_directory_path() /
                       ("btl_harness_" + std::to_string(::getpid()));
  btl::ExperimentConfig cfg = expansion_config();
  cfg.output_dir = dir.string();
  const btl::ExperimentResult result = btl::run_expansion(cfg);
  const fs::path csv = btl::write_experiment_output(cfg, result);

  CHECK(csv == dir / "expansion.csv");
  REQUIRE(fs::exists(csv));
  REQUIRE(fs::exists(dir / "expansion_manifest.json"));

  std::ifstream in(csv, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == btl::table_to_csv(result.rows));

  std::ifstream min(dir / "expansion_manifest.json");
  nlohmann::json manifest;
  min >> manifest;
  CHECK(manifest.at("row_count") == result.rows.size());
  CHECK(manifest.at("version") == btl::kVersion);

  std::error_code ec;
  fs::remove_all(dir, ec);
}

TEST_CASE("kept datasets reproduce the recorded metrics") {
  const fs::path dir = fs::temp_directory_path() /
                       ("btl_keepdata_" + std::to_string(::getpid()));
  btl::ExperimentConfig cfg;
  cfg.kind = btl::ExperimentKind::kRisk;
  cfg.n = {20};
  cfg.p_rule.literal = 0.6;
  cfg.L = {2};
  cfg.reps = 2;
  cfg.estimators = {btl::EstimatorKind::kMle};
  cfg.seed = 53;
  cfg.output_dir = dir.string();
  cfg.keep_data = true;
  const btl::ExperimentResult result = btl::run_risk(cfg);

  // The sidecar records the replication's sim seed; replaying it yields the
  // exact dataset and true merits, hence the exact recorded metric.
  const fs::path kept = dir / "data" / "grid000_rep00001.csv";
  REQUIRE(fs::exists(kept));
  const btl::ComparisonDataset data = btl::read_dataset(kept);
  REQUIRE(data.meta().seed.has_value());

  btl::SimConfig sim;
  sim.n = 20;
  sim.p = 0.6;
  sim.L = 2;
  sim.kappa = 2.0;
  sim.seed = *data.meta().seed;
  const btl::SimDraw replay = btl::simulate(sim);
  REQUIRE(replay.data.edges().size() == data.edges().size());
  for (std::size_t k = 0; k < data.edges().size(); ++k) {
    CHECK(replay.data.edges()[k].ybar == data.edges()[k].ybar);
  }

  const btl::EstimateReport refit = btl::fit_mle(data);
  REQUIRE(refit.converged);
  const double sq = (refit.theta - replay.merits.centered).squaredNorm();
  bool found = false;
  for (const btl::TableRow& r : result.rows) {
    if (r.rep == 1 && r.metric == "sq_l2_error") {
      CHECK(r.value == doctest::Approx(sq).epsilon(1e-12));
      found = true;
    }
  }
  CHECK(found);

  std::error_code ec;
  fs::remove_all(dir, ec);
}
