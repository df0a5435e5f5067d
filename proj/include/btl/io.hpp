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

#ifndef BTL_IO_HPP_
#define BTL_IO_HPP_

#include <filesystem>
#include <string>

#include "btl/dataset.hpp"

namespace btl {

// Dataset files are CSV with header "i,j,wins,count"; each row stores one
// pair (i < j) with i's win total. A JSON sidecar named like the CSV but
// with a .json extension carries {n, p, L, kappa, seed} for synthetic data.

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

void write_dataset_csv(const ComparisonDataset& data,
                       const std::filesystem::path& csv_path);

// Writes the sidecar for a dataset; fields absent from the metadata are
// written as null.
void write_dataset_sidecar(const ComparisonDataset& data,
                           const std::filesystem::path& json_path);

// Parses a dataset CSV. n is taken from n_hint when given (it must cover
// every item id), otherwise inferred as max id + 1. Malformed input throws
// IoError.
ComparisonDataset read_dataset_csv(const std::filesystem::path& csv_path,
                                   std::optional<int> n_hint = {},
                                   DatasetMeta meta = {});

// Reads a sidecar; returns the declared n and metadata.
struct SidecarContents {
  int n = 0;
  DatasetMeta meta;
};
SidecarContents read_dataset_sidecar(const std::filesystem::path& json_path);

// Convenience: reads the CSV plus its sidecar when one exists next to it.
ComparisonDataset read_dataset(const std::filesystem::path& csv_path);

// Serializes a double so that reading it back recovers the same value,
// using the shortest of %.15g/%.16g/%.17g that round-trips.
std::string format_double(double value);

}  // namespace btl

#endif  // BTL_IO_HPP_
