// Copyright 2026 The evoweights Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evoweights {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible shape (matrix columns vs. weight length, ...).
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(const std::string& what, std::size_t expected,
                    std::size_t actual);

  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// A value violates the invariant of the type being constructed.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised by the replicator step when 1 + Delta_j <= 0 for some feature.
class PositivityViolation : public Error {
 public:
  PositivityViolation(std::size_t step, std::size_t feature, double factor);

  std::size_t step() const { return step_; }
  std::size_t feature() const { return feature_; }
  double factor() const { return factor_; }

 private:
  std::size_t step_;
  std::size_t feature_;
  double factor_;
};

/// The weighted row sum r_i vanishes, so the dependence shares are undefined.
class ZeroFitnessRow : public Error {
 public:
  explicit ZeroFitnessRow(std::size_t row);

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

}  // namespace evoweights
