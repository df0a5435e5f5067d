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

#include "btl/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "btl/errors.hpp"

namespace btl {
namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) {
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    fields.push_back(strip(field));
  }
  if (!line.empty() && line.back() == ',') {
    fields.push_back("");
  }
  return fields;
}

long long parse_int(const std::string& s, const char* what, int line_no) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) {
    throw IoError(std::string("dataset csv line ") + std::to_string(line_no) +
                  ": bad " + what + " '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s, const char* what, int line_no) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size()) {
    throw IoError(std::string("dataset csv line ") + std::to_string(line_no) +
                  ": bad " + what + " '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double value) {
  char buf[40];
  for (int precision : {15, 16, 17}) {
    std::snprintf(buf, sizeof(buf), "%.*g", precision, value);
    if (std::strtod(buf, nullptr) == value) {
      break;
    }
  }
  return buf;
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".json");
  return p;
}

void write_dataset_csv(const ComparisonDataset& data,
                       const std::filesystem::path& csv_path) {
  std::ofstream out(csv_path);
  if (!out) {
    throw IoError("cannot open for writing: " + csv_path.string());
  }
  out << "i,j,wins,count\n";
  for (const Edge& e : data.edges()) {
    const double wins = e.ybar * static_cast<double>(e.count);
    out << e.i << ',' << e.j << ',';
    if (wins == std::floor(wins) && std::abs(wins) < 9.0e15) {
      out << static_cast<long long>(wins);
    } else {
      out << format_double(wins);
    }
    out << ',' << e.count << '\n';
  }
  if (!out.good()) {
    throw IoError("write failed: " + csv_path.string());
  }
}

void write_dataset_sidecar(const ComparisonDataset& data,
                           const std::filesystem::path& json_path) {
  nlohmann::json j;
  j["n"] = data.n();
  const DatasetMeta& m = data.meta();
  j["p"] = m.p ? nlohmann::json(*m.p) : nlohmann::json(nullptr);
  j["L"] = m.L ? nlohmann::json(*m.L) : nlohmann::json(nullptr);
  j["kappa"] = m.kappa ? nlohmann::json(*m.kappa) : nlohmann::json(nullptr);
  j["seed"] = m.seed ? nlohmann::json(*m.seed) : nlohmann::json(nullptr);
  std::ofstream out(json_path);
  if (!out) {
    throw IoError("cannot open for writing: " + json_path.string());
  }
  out << j.dump(2) << '\n';
  if (!out.good()) {
    throw IoError("write failed: " + json_path.string());
  }
}

ComparisonDataset read_dataset_csv(const std::filesystem::path& csv_path,
                                   std::optional<int> n_hint,
                                   DatasetMeta meta) {
  std::ifstream in(csv_path);
  if (!in) {
    throw IoError("cannot open: " + csv_path.string());
  }
  std::string line;
  if (!std::getline(in, line) || strip(line) != "i,j,wins,count") {
    throw IoError("dataset csv: missing 'i,j,wins,count' header in " +
                  csv_path.string());
  }
  std::vector<Edge> edges;
  int max_id = -1;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (strip(line).empty()) {
      continue;
    }
    const std::vector<std::string> f = split_csv_row(line);
    if (f.size() != 4) {
      throw IoError("dataset csv line " + std::to_string(line_no) +
                    ": expected 4 fields, got " + std::to_string(f.size()));
    }
    Edge e;
    const long long i = parse_int(f[0], "item id", line_no);
    const long long j = parse_int(f[1], "item id", line_no);
    const double wins = parse_double(f[2], "win count", line_no);
    const long long count = parse_int(f[3], "comparison count", line_no);
    if (i < 0 || j < 0 || i >= j) {
      throw IoError("dataset csv line " + std::to_string(line_no) +
                    ": pair needs 0 <= i < j");
    }
    if (count < 1) {
      throw IoError("dataset csv line " + std::to_string(line_no) +
                    ": count must be at least 1");
    }
    if (!std::isfinite(wins)) {
      throw IoError("dataset csv line " + std::to_string(line_no) +
                    ": non-finite win count");
    }
    e.i = static_cast<int>(i);
    e.j = static_cast<int>(j);
    e.count = count;
    e.ybar = wins / static_cast<double>(count);
    max_id = std::max(max_id, e.j);
    edges.push_back(e);
  }
  int n = max_id + 1;
  if (n_hint) {
    if (*n_hint < n) {
      throw IoError("dataset csv: declared n " + std::to_string(*n_hint) +
                    " is smaller than max item id " + std::to_string(max_id));
    }
    n = *n_hint;
  }
  if (n < 1) {
    throw IoError("dataset csv: no rows and no declared n in " +
                  csv_path.string());
  }
  return ComparisonDataset(n, std::move(edges), std::move(meta));
}

SidecarContents read_dataset_sidecar(const std::filesystem::path& json_path) {
  std::ifstream in(json_path);
  if (!in) {
    throw IoError("cannot open: " + json_path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("sidecar " + json_path.string() + ": " + e.what());
  }
  SidecarContents out;
  if (!j.contains("n") || !j["n"].is_number_integer()) {
    throw IoError("sidecar " + json_path.string() + ": missing integer n");
  }
  out.n = j["n"].get<int>();
  auto opt_num = [&](const char* key) -> std::optional<double> {
    if (j.contains(key) && j[key].is_number()) {
      return j[key].get<double>();
    }
    return std::nullopt;
  };
  out.meta.p = opt_num("p");
  out.meta.kappa = opt_num("kappa");
  if (j.contains("L") && j["L"].is_number_integer()) {
    out.meta.L = j["L"].get<std::int64_t>();
  }
  if (j.contains("seed") && j["seed"].is_number_unsigned()) {
    out.meta.seed = j["seed"].get<std::uint64_t>();
  } else if (j.contains("seed") && j["seed"].is_number_integer()) {
    out.meta.seed = static_cast<std::uint64_t>(j["seed"].get<std::int64_t>());
  }
  return out;
}

ComparisonDataset read_dataset(const std::filesystem::path& csv_path) {
  const std::filesystem::path meta_path = sidecar_path(csv_path);
  if (std::filesystem::exists(meta_path)) {
    SidecarContents side = read_dataset_sidecar(meta_path);
    return read_dataset_csv(csv_path, side.n, std::move(side.meta));
  }
  return read_dataset_csv(csv_path);
}

}  // namespace btl
