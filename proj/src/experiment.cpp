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

#include "btl/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "btl/errors.hpp"
#include "btl/expansion.hpp"
#include "btl/inference.hpp"
#include "btl/io.hpp"
#include "btl/mle.hpp"
#include "btl/rng.hpp"
#include "btl/spectral.hpp"
#include "btl/version.hpp"

namespace btl {

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::kQq:
      return "qq";
    case ExperimentKind::kRisk:
      return "risk";
    case ExperimentKind::kCoverage:
      return "coverage";
    case ExperimentKind::kExpansion:
      return "expansion";
  }
  return "unknown";
}

std::string to_string(EstimatorKind estimator) {
  return estimator == EstimatorKind::kMle ? "mle" : "spectral";
}

double PRule::operator()(int n) const {
  if (literal) {
    return *literal;
  }
  if (n < 2) {
    throw ConfigError("p rule polylog needs n >= 2");
  }
  const double raw =
      std::pow(std::log(static_cast<double>(n)), exponent) / n;
  return std::min(1.0, raw);
}

PRule PRule::parse(const std::string& text) {
  PRule rule;
  const std::string prefix = "polylog:";
  if (text.rfind(prefix, 0) == 0) {
    const std::string arg = text.substr(prefix.size());
    std::size_t pos = 0;
    double e = 0.0;
    try {
      e = std::stod(arg, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != arg.size() || !(e > 0.0)) {
      throw ConfigError("bad p rule '" + text + "'");
    }
    rule.exponent = e;
    return rule;
  }
  std::size_t pos = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size() || !(value > 0.0) || value > 1.0) {
    throw ConfigError("bad p rule '" + text + "': need polylog:<exp> or a "
                      "number in (0, 1]");
  }
  rule.literal = value;
  return rule;
}

std::string PRule::str() const {
  if (literal) {
    return format_double(*literal);
  }
  return "polylog:" + format_double(exponent);
}

namespace {

EstimatorKind estimator_from_string(const std::string& name) {
  if (name == "mle") {
    return EstimatorKind::kMle;
  }
  if (name == "spectral") {
    return EstimatorKind::kSpectral;
  }
  throw ConfigError("unknown estimator '" + name + "'");
}

ExperimentKind kind_from_string(const std::string& name) {
  if (name == "qq") {
    return ExperimentKind::kQq;
  }
  if (name == "risk") {
    return ExperimentKind::kRisk;
  }
  if (name == "coverage") {
    return ExperimentKind::kCoverage;
  }
  if (name == "expansion") {
    return ExperimentKind::kExpansion;
  }
  throw ConfigError("unknown experiment kind '" + name + "'");
}

template <class T>
std::vector<T> int_list(const nlohmann::json& j, const char* key) {
  std::vector<T> out;
  const nlohmann::json& v = j.at(key);
  if (v.is_number_integer()) {
    out.push_back(v.get<T>());
  } else if (v.is_array() && !v.empty()) {
    for (const auto& item : v) {
      if (!item.is_number_integer()) {
        throw ConfigError(std::string(key) + " must hold integers");
      }
      out.push_back(item.get<T>());
    }
  } else {
    throw ConfigError(std::string(key) +
                      " must be an integer or nonempty integer array");
  }
  return out;
}

}  // namespace

ExperimentConfig parse_experiment_config(const nlohmann::json& j) {
  ExperimentConfig cfg;
  try {
    cfg.kind = kind_from_string(j.at("kind").get<std::string>());
    cfg.n = int_list<int>(j, "n");
    for (int n : cfg.n) {
      if (n < 1) {
        throw ConfigError("n must be positive");
      }
    }
    const nlohmann::json& p = j.at("p");
    if (p.is_string()) {
      cfg.p_rule = PRule::parse(p.get<std::string>());
    } else if (p.is_number()) {
      cfg.p_rule = PRule::parse(format_double(p.get<double>()));
    } else {
      throw ConfigError("p must be a number or a rule string");
    }
    if (j.contains("L")) {
      cfg.L = int_list<std::int64_t>(j, "L");
      for (std::int64_t l : cfg.L) {
        if (l < 1) {
          throw ConfigError("L must be positive");
        }
      }
    }
    cfg.kappa = j.value("kappa", 2.0);
    if (!(cfg.kappa >= 0.0)) {
      throw ConfigError("kappa must be nonnegative");
    }
    const std::string law = j.value("merit_law", std::string("uniform"));
    if (law == "uniform") {
      cfg.merit_law = MeritLaw::kUniform;
    } else if (law == "fixed") {
      cfg.merit_law = MeritLaw::kFixed;
      if (!j.contains("merits") || !j["merits"].is_array()) {
        throw ConfigError("merit_law 'fixed' needs a merits array");
      }
      const auto& arr = j["merits"];
      cfg.fixed_merits.resize(static_cast<Eigen::Index>(arr.size()));
      for (std::size_t k = 0; k < arr.size(); ++k) {
        cfg.fixed_merits[static_cast<Eigen::Index>(k)] = arr[k].get<double>();
      }
      if (cfg.n.size() != 1 ||
          cfg.fixed_merits.size() != cfg.n.front()) {
        throw ConfigError("fixed merits need a single n equal to their length");
      }
    } else {
      throw ConfigError("unknown merit_law '" + law + "'");
    }
    cfg.reps = j.at("reps").get<int>();
    if (cfg.reps < 1) {
      throw ConfigError("reps must be at least 1");
    }
    cfg.alpha = j.value("alpha", 0.05);
    if (!(cfg.alpha > 0.0) || !(cfg.alpha < 1.0)) {
      throw ConfigError("alpha must lie in (0, 1)");
    }
    cfg.c0 = j.value("c0", 0.1);
    if (!(cfg.c0 >= 0.0)) {
      throw ConfigError("c0 must be nonnegative");
    }
    cfg.target = j.value("target", 0);
    if (cfg.target < 0) {
      throw ConfigError("target must be a valid item index");
    }
    if (j.contains("estimators")) {
      if (!j["estimators"].is_array() || j["estimators"].empty()) {
        throw ConfigError("estimators must be a nonempty array");
      }
      cfg.estimators.clear();
      for (const auto& e : j["estimators"]) {
        cfg.estimators.push_back(estimator_from_string(e.get<std::string>()));
      }
    }
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.output_dir = j.value("output_dir", std::string("."));
    cfg.keep_data = j.value("keep_data", false);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("experiment config: ") + e.what());
  }
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config: " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return parse_experiment_config(j);
}

nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["kind"] = to_string(cfg.kind);
  j["n"] = cfg.n;
  j["p"] = cfg.p_rule.str();
  j["L"] = cfg.L;
  j["kappa"] = cfg.kappa;
  j["merit_law"] =
      cfg.merit_law == MeritLaw::kUniform ? "uniform" : "fixed";
  if (cfg.merit_law == MeritLaw::kFixed) {
    std::vector<double> merits(cfg.fixed_merits.begin(),
                               cfg.fixed_merits.end());
    j["merits"] = merits;
  }
  j["reps"] = cfg.reps;
  j["alpha"] = cfg.alpha;
  j["c0"] = cfg.c0;
  j["target"] = cfg.target;
  std::vector<std::string> estimators;
  for (EstimatorKind e : cfg.estimators) {
    estimators.push_back(to_string(e));
  }
  j["estimators"] = estimators;
  j["seed"] = cfg.seed;
  j["output_dir"] = cfg.output_dir;
  j["keep_data"] = cfg.keep_data;
  return j;
}

void write_table_csv(const std::vector<TableRow>& rows, std::ostream& out) {
  out << "n,p,L,rep,estimator,metric,value\n";
  for (const TableRow& r : rows) {
    out << r.n << ',' << format_double(r.p) << ',' << r.L << ',' << r.rep
        << ',' << r.estimator << ',' << r.metric << ','
        << format_double(r.value) << '\n';
  }
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  write_table_csv(rows, out);
  return out.str();
}

double ks_distance_normal(std::vector<double> values) {
  if (values.empty()) {
    throw std::domain_error("ks_distance_normal: empty sample");
  }
  std::sort(values.begin(), values.end());
  const double m = static_cast<double>(values.size());
  double dist = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double mid = (static_cast<double>(i) + 0.5) / m;
    dist = std::max(dist, std::abs(normal_cdf(values[i]) - mid));
  }
  return dist;
}

double quantile_sorted(const std::vector<double>& sorted, double prob) {
  if (sorted.empty()) {
    throw std::domain_error("quantile_sorted: empty sample");
  }
  if (!(prob >= 0.0) || !(prob <= 1.0)) {
    throw std::domain_error("quantile_sorted: prob must lie in [0, 1]");
  }
  const double h = (static_cast<double>(sorted.size()) - 1.0) * prob;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) {
    return sorted.back();
  }
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

namespace {

struct RepRecord {
  bool failed = false;
  std::vector<std::pair<std::string, double>> metrics;
};

RepRecord evaluate_replication(const ExperimentConfig& cfg, EstimatorKind est,
                               const SimDraw& draw, double p,
                               std::int64_t count) {
  RepRecord rec;
  const Eigen::VectorXd& truth = draw.merits.centered;
  const EstimateReport report = est == EstimatorKind::kMle
                                    ? fit_mle(draw.data)
                                    : fit_spectral(draw.data);
  if (!report.converged) {
    rec.failed = true;
    return rec;
  }
  const Eigen::VectorXd& theta = report.theta;
  switch (cfg.kind) {
    case ExperimentKind::kQq: {
      const Eigen::VectorXd rho = est == EstimatorKind::kMle
                                      ? rho_mle(theta, draw.data, true)
                                      : rho_spectral(theta, draw.data, true);
      rec.metrics.emplace_back(
          "std_error", rho[cfg.target] * (theta[cfg.target] - truth[cfg.target]));
      break;
    }
    case ExperimentKind::kRisk: {
      rec.metrics.emplace_back("sq_l2_error", (theta - truth).squaredNorm());
      rec.metrics.emplace_back("theory_constant",
                               est == EstimatorKind::kMle
                                   ? l2_constant_mle(truth, p, count)
                                   : l2_constant_spectral(truth, p, count));
      break;
    }
    case ExperimentKind::kCoverage: {
      const Eigen::VectorXd rho = est == EstimatorKind::kMle
                                      ? rho_mle(theta, draw.data, true)
                                      : rho_spectral(theta, draw.data, true);
      const IntervalSet set =
          build_interval_set(theta, rho, cfg.target, cfg.alpha, cfg.c0);
      const RankInterval rank = rank_ci(set);
      int true_rank = 1;
      for (Eigen::Index i = 0; i < truth.size(); ++i) {
        if (truth[i] > truth[cfg.target]) {
          ++true_rank;
        }
      }
      double mean_sim = 0.0;
      for (const Interval& iv : set.others) {
        mean_sim += iv.length();
      }
      mean_sim /= static_cast<double>(set.others.size());
      rec.metrics.emplace_back(
          "merit_covered",
          set.target_interval.contains(truth[cfg.target]) ? 1.0 : 0.0);
      rec.metrics.emplace_back(
          "rank_covered",
          rank.lo <= true_rank && true_rank <= rank.hi ? 1.0 : 0.0);
      rec.metrics.emplace_back("target_ci_length",
                               set.target_interval.length());
      rec.metrics.emplace_back("rank_ci_length",
                               static_cast<double>(rank.hi - rank.lo + 1));
      rec.metrics.emplace_back("mean_simultaneous_length", mean_sim);
      break;
    }
    case ExperimentKind::kExpansion: {
      const Eigen::VectorXd main =
          est == EstimatorKind::kMle ? mle_main_term(draw.data, truth)
                                     : spectral_main_term(draw.data, truth);
      const ExpansionReport er =
          remainder_report(theta, truth, main, p, count);
      rec.metrics.emplace_back("scaled_sup", er.scaled_sup);
      rec.metrics.emplace_back("scaled_l2", er.scaled_l2);
      break;
    }
  }
  return rec;
}

void append_aggregates(const ExperimentConfig& cfg,
                       const std::vector<std::vector<RepRecord>>& records,
                       std::size_t est_index, int n, double p,
                       std::int64_t count, std::vector<TableRow>& rows,
                       std::int64_t* excluded_out) {
  const std::string est_name = to_string(cfg.estimators[est_index]);
  auto add = [&](const std::string& metric, double value) {
    rows.push_back(TableRow{n, p, count, -1, est_name, metric, value});
  };

  std::int64_t excluded = 0;
  std::vector<const RepRecord*> included;
  included.reserve(records.size());
  for (const auto& per_rep : records) {
    const RepRecord& rec = per_rep[est_index];
    if (rec.failed) {
      ++excluded;
    } else {
      included.push_back(&rec);
    }
  }
  *excluded_out = excluded;

  auto collect = [&](const char* name) {
    std::vector<double> values;
    values.reserve(included.size());
    for (const RepRecord* rec : included) {
      for (const auto& [metric, value] : rec->metrics) {
        if (metric == name) {
          values.push_back(value);
        }
      }
    }
    return values;
  };
  auto mean = [](const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) {
      acc += x;
    }
    return acc / static_cast<double>(v.size());
  };

  if (!included.empty()) {
    switch (cfg.kind) {
      case ExperimentKind::kQq: {
        std::vector<double> errors = collect("std_error");
        std::vector<double> sorted = errors;
        std::sort(sorted.begin(), sorted.end());
        for (int percent = 1; percent <= 99; ++percent) {
          char name[24];
          std::snprintf(name, sizeof(name), "quantile_%02d", percent);
          add(name, quantile_sorted(sorted, percent / 100.0));
        }
        add("ks_normal", ks_distance_normal(errors));
        break;
      }
      case ExperimentKind::kRisk: {
        const double emp = mean(collect("sq_l2_error"));
        const double theory = mean(collect("theory_constant"));
        add("mean_sq_l2_error", emp);
        add("mean_theory_constant", theory);
        add("risk_ratio", emp / theory);
        break;
      }
      case ExperimentKind::kCoverage: {
        add("merit_coverage", mean(collect("merit_covered")));
        add("rank_coverage", mean(collect("rank_covered")));
        add("mean_target_ci_length", mean(collect("target_ci_length")));
        add("mean_rank_ci_length", mean(collect("rank_ci_length")));
        break;
      }
      case ExperimentKind::kExpansion: {
        std::vector<double> sup = collect("scaled_sup");
        std::vector<double> l2 = collect("scaled_l2");
        std::sort(sup.begin(), sup.end());
        std::sort(l2.begin(), l2.end());
        add("median_scaled_sup", quantile_sorted(sup, 0.5));
        add("median_scaled_l2", quantile_sorted(l2, 0.5));
        break;
      }
    }
  }
  add("excluded", static_cast<double>(excluded));
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.n.empty() || cfg.L.empty()) {
    throw ConfigError("experiment grid is empty");
  }
  if (cfg.reps < 1) {
    throw ConfigError("reps must be at least 1");
  }
  if (cfg.estimators.empty()) {
    throw ConfigError("no estimators selected");
  }
  const bool needs_target = cfg.kind == ExperimentKind::kQq ||
                            cfg.kind == ExperimentKind::kCoverage;
  if (needs_target) {
    for (int n : cfg.n) {
      if (cfg.target >= n) {
        throw ConfigError("target item index must be below every n");
      }
    }
  }

  const auto t0 = std::chrono::steady_clock::now();
  const std::size_t est_count = cfg.estimators.size();
  std::vector<TableRow> rows;
  nlohmann::json exclusions = nlohmann::json::array();

  std::filesystem::path data_dir;
  if (cfg.keep_data) {
    data_dir = std::filesystem::path(cfg.output_dir) / "data";
    std::filesystem::create_directories(data_dir);
  }

  int grid_index = 0;
  for (int n : cfg.n) {
    for (std::int64_t count : cfg.L) {
      const double p = cfg.p_rule(n);
      if (!(p > 0.0) || p > 1.0) {
        throw ConfigError("p rule gives " + format_double(p) + " at n = " +
                          std::to_string(n) + "; need (0, 1]");
      }
      const std::uint64_t grid_seed =
          derive_seed(cfg.seed, static_cast<std::uint64_t>(grid_index));
      std::vector<std::vector<RepRecord>> records(
          static_cast<std::size_t>(cfg.reps),
          std::vector<RepRecord>(est_count));

#pragma omp parallel for schedule(dynamic)
      for (int rep = 0; rep < cfg.reps; ++rep) {
        auto& per_rep = records[static_cast<std::size_t>(rep)];
        try {
          SimConfig sim;
          sim.n = n;
          sim.p = p;
          sim.L = count;
          sim.kappa = cfg.kappa;
          sim.merit_law = cfg.merit_law;
          sim.fixed_merits = cfg.fixed_merits;
          sim.seed = derive_seed(grid_seed, static_cast<std::uint64_t>(rep));
          const SimDraw draw = simulate(sim);
          if (cfg.keep_data) {
            char stem[64];
            std::snprintf(stem, sizeof(stem), "grid%03d_rep%05d", grid_index,
                          rep);
            const std::filesystem::path csv = data_dir / (std::string(stem) + ".csv");
            write_dataset_csv(draw.data, csv);
            write_dataset_sidecar(draw.data, sidecar_path(csv));
          }
          for (std::size_t e = 0; e < est_count; ++e) {
            try {
              per_rep[e] = evaluate_replication(cfg, cfg.estimators[e], draw,
                                                p, count);
            } catch (const std::exception&) {
              per_rep[e] = RepRecord{};
              per_rep[e].failed = true;
            }
          }
        } catch (...) {
          for (std::size_t e = 0; e < est_count; ++e) {
            per_rep[e] = RepRecord{};
            per_rep[e].failed = true;
          }
        }
      }

      for (int rep = 0; rep < cfg.reps; ++rep) {
        for (std::size_t e = 0; e < est_count; ++e) {
          const RepRecord& rec = records[static_cast<std::size_t>(rep)][e];
          const std::string est_name = to_string(cfg.estimators[e]);
          if (rec.failed) {
            rows.push_back(
                TableRow{n, p, count, rep, est_name, "failed", 1.0});
            continue;
          }
          for (const auto& [metric, value] : rec.metrics) {
            rows.push_back(TableRow{n, p, count, rep, est_name, metric, value});
          }
        }
      }
      for (std::size_t e = 0; e < est_count; ++e) {
        std::int64_t excluded = 0;
        append_aggregates(cfg, records, e, n, p, count, rows, &excluded);
        nlohmann::json entry;
        entry["n"] = n;
        entry["p"] = p;
        entry["L"] = count;
        entry["estimator"] = to_string(cfg.estimators[e]);
        entry["excluded"] = excluded;
        exclusions.push_back(entry);
      }
      ++grid_index;
    }
  }

  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  ExperimentResult result;
  result.rows = std::move(rows);
  result.manifest["version"] = kVersion;
  result.manifest["kind"] = to_string(cfg.kind);
  result.manifest["config"] = config_to_json(cfg);
  result.manifest["wall_seconds"] = wall;
  result.manifest["row_count"] = result.rows.size();
  result.manifest["exclusions"] = exclusions;
  return result;
}

namespace {

ExperimentResult run_kind(const ExperimentConfig& cfg, ExperimentKind kind) {
  if (cfg.kind != kind) {
    throw ConfigError("config kind is '" + to_string(cfg.kind) +
                      "', expected '" + to_string(kind) + "'");
  }
  return run_experiment(cfg);
}

}  // namespace

ExperimentResult run_qq(const ExperimentConfig& cfg) {
  return run_kind(cfg, ExperimentKind::kQq);
}
ExperimentResult run_risk(const ExperimentConfig& cfg) {
  return run_kind(cfg, ExperimentKind::kRisk);
}
ExperimentResult run_coverage(const ExperimentConfig& cfg) {
  return run_kind(cfg, ExperimentKind::kCoverage);
}
ExperimentResult run_expansion(const ExperimentConfig& cfg) {
  return run_kind(cfg, ExperimentKind::kExpansion);
}

std::filesystem::path write_experiment_output(const ExperimentConfig& cfg,
                                              const ExperimentResult& result) {
  const std::filesystem::path dir(cfg.output_dir);
  std::filesystem::create_directories(dir);
  const std::filesystem::path csv = dir / (to_string(cfg.kind) + ".csv");
  {
    std::ofstream out(csv);
    if (!out) {
      throw IoError("cannot open for writing: " + csv.string());
    }
    write_table_csv(result.rows, out);
    if (!out.good()) {
      throw IoError("write failed: " + csv.string());
    }
  }
  const std::filesystem::path manifest =
      dir / (to_string(cfg.kind) + "_manifest.json");
  std::ofstream out(manifest);
  if (!out) {
    throw IoError("cannot open for writing: " + manifest.string());
  }
  out << result.manifest.dump(2) << '\n';
  if (!out.good()) {
    throw IoError("write failed: " + manifest.string());
  }
  return csv;
}

}  // namespace btl
