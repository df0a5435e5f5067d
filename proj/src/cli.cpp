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

#include "btl/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "btl/errors.hpp"
#include "btl/estimate.hpp"
#include "btl/experiment.hpp"
#include "btl/io.hpp"
#include "btl/mle.hpp"
#include "btl/sim.hpp"
#include "btl/spectral.hpp"
#include "btl/version.hpp"

namespace btl {
namespace {

nlohmann::json report_to_json(const EstimateReport& report,
                              const std::string& estimator) {
  nlohmann::json j;
  j["estimator"] = estimator;
  j["n"] = report.theta.size();
  j["theta"] = std::vector<double>(report.theta.begin(), report.theta.end());
  j["iterations"] = report.iterations;
  j["residual"] = report.residual;
  j["converged"] = report.converged;
  j["neg_log_lik"] = report.neg_log_lik;
  return j;
}

int run_simulate(int n, double p, std::int64_t count, double kappa,
                 std::uint64_t seed, const std::string& out_path) {
  SimConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.L = count;
  cfg.kappa = kappa;
  cfg.seed = seed;
  const SimDraw draw = simulate(cfg);
  write_dataset_csv(draw.data, out_path);
  write_dataset_sidecar(draw.data, sidecar_path(out_path));
  std::cout << out_path << '\n';
  return 0;
}

int run_fit(const std::string& data_path, const std::string& estimator,
            const std::string& out_path, double grad_tol, int max_iters,
            std::optional<double> d) {
  const ComparisonDataset data = read_dataset(data_path);
  EstimateReport report;
  if (estimator == "mle") {
    MleOptions opts;
    opts.grad_tol = grad_tol;
    opts.max_iters = max_iters;
    report = fit_mle(data, opts);
  } else {
    SpectralOptions opts;
    opts.d = d;
    report = fit_spectral(data, opts);
  }
  if (!report.converged) {
    std::cerr << "fit: " << estimator
              << " estimator did not converge (residual "
              << format_double(report.residual) << ")\n";
    return 3;
  }
  const nlohmann::json j = report_to_json(report, estimator);
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) {
      throw IoError("cannot open for writing: " + out_path);
    }
    out << j.dump(2) << '\n';
  }
  return 0;
}

int run_experiment_cmd(const std::string& config_path,
                       std::optional<std::uint64_t> seed,
                       std::optional<std::string> output_dir,
                       bool keep_data) {
  ExperimentConfig cfg = load_experiment_config(config_path);
  if (seed) {
    cfg.seed = *seed;
  }
  if (output_dir) {
    cfg.output_dir = *output_dir;
  }
  if (keep_data) {
    cfg.keep_data = true;
  }
  const ExperimentResult result = run_experiment(cfg);
  const std::filesystem::path csv = write_experiment_output(cfg, result);
  std::cout << csv.string() << '\n';
  return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Pairwise-comparison ranking: simulation, estimation, "
               "uncertainty quantification"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // simulate
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Draw a synthetic comparison dataset (CSV + JSON sidecar)");
  int sim_n = 0;
  double sim_p = 1.0;
  std::int64_t sim_L = 1;
  double sim_kappa = 2.0;
  std::uint64_t sim_seed = 0;
  std::string sim_out;
  sim_cmd->add_option("--n", sim_n, "number of items")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--p", sim_p, "edge probability in (0, 1]")->required();
  sim_cmd->add_option("--L", sim_L, "comparisons per edge")
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--kappa", sim_kappa,
                      "merit range; merits are i.i.d. Unif[0, kappa]")
      ->check(CLI::NonNegativeNumber);
  sim_cmd->add_option("--seed", sim_seed, "master seed");
  sim_cmd->add_option("--out", sim_out, "output CSV path")->required();

  // fit
  auto* fit_cmd = app.add_subcommand(
      "fit", "Fit merits from a dataset CSV; writes an estimate report JSON");
  std::string fit_data;
  std::string fit_estimator;
  std::string fit_out;
  double fit_grad_tol = 1e-10;
  int fit_max_iters = 100;
  double fit_d = 0.0;
  fit_cmd->add_option("--data", fit_data, "dataset CSV path")->required();
  fit_cmd->add_option("--estimator", fit_estimator, "mle or spectral")
      ->required()
      ->check(CLI::IsMember({"mle", "spectral"}));
  fit_cmd->add_option("--out", fit_out, "report path (default: stdout)");
  fit_cmd->add_option("--grad-tol", fit_grad_tol,
                      "gradient sup-norm tolerance (mle)");
  fit_cmd->add_option("--max-iters", fit_max_iters,
                      "Newton iteration budget (mle)");
  auto* d_opt = fit_cmd->add_option(
      "--d", fit_d, "transition normalization override (spectral)");

  // experiment
  auto* exp_cmd = app.add_subcommand(
      "experiment", "Run a replicated experiment described by a JSON config");
  std::string exp_config;
  std::uint64_t exp_seed = 0;
  std::string exp_output_dir;
  bool exp_keep_data = false;
  exp_cmd->add_option("--config", exp_config, "ExperimentConfig JSON path")
      ->required();
  auto* seed_opt =
      exp_cmd->add_option("--seed", exp_seed, "override the config seed");
  auto* dir_opt = exp_cmd->add_option("--output-dir", exp_output_dir,
                                      "override the config output_dir");
  exp_cmd->add_flag("--keep-data", exp_keep_data,
                    "persist every replication's dataset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (sim_cmd->parsed()) {
      return run_simulate(sim_n, sim_p, sim_L, sim_kappa, sim_seed, sim_out);
    }
    if (fit_cmd->parsed()) {
      std::optional<double> d;
      if (d_opt->count() > 0) {
        d = fit_d;
      }
      return run_fit(fit_data, fit_estimator, fit_out, fit_grad_tol,
                     fit_max_iters, d);
    }
    if (exp_cmd->parsed()) {
      std::optional<std::uint64_t> seed;
      if (seed_opt->count() > 0) {
        seed = exp_seed;
      }
      std::optional<std::string> dir;
      if (dir_opt->count() > 0) {
        dir = exp_output_dir;
      }
      return run_experiment_cmd(exp_config, seed, dir, exp_keep_data);
    }
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return fit_cmd->parsed() ? 3 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace btl
