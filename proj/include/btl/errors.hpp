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

#ifndef BTL_ERRORS_HPP_
#define BTL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace btl {

// Base class for every failure this library raises on its own behalf.
// Precondition violations use the standard logic_error family instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The comparison graph does not connect all items, so no estimator is
// identifiable.
class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

// An item without any comparisons was passed to a per-item formula that
// divides by its degree.
class IsolatedItemError : public Error {
 public:
  explicit IsolatedItemError(int item)
      : Error("item " + std::to_string(item) + " has no comparisons"),
        item_(item) {}
  int item() const { return item_; }

 private:
  int item_;
};

// A transition-matrix row accumulated more off-diagonal mass than the
// normalization d allows.
class DegenerateNormalizationError : public Error {
 public:
  DegenerateNormalizationError(int row, double mass, double d)
      : Error("row " + std::to_string(row) + " mass " + std::to_string(mass) +
              " exceeds normalization " + std::to_string(d)),
        row_(row) {}
  int row() const { return row_; }

 private:
  int row_;
};

// The comparison chain is reducible: some item never wins or never loses,
// or the stationary distribution collapsed on a proper subset of items.
class ReducibleChainError : public Error {
 public:
  using Error::Error;
};

// An iteration budget ran out before the requested tolerance was met.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// A file could not be read, written, or parsed.
class IoError : public Error {
 public:
  using Error::Error;
};

// An experiment or CLI configuration is invalid.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace btl

#endif  // BTL_ERRORS_HPP_
