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

#include "evoweights/errors.hpp"

#include <fmt/format.h>

namespace evoweights {

DimensionMismatch::DimensionMismatch(const std::string& what,
                                     std::size_t expected, std::size_t actual)
    : Error(fmt::format("{}: expected {}, got {}", what, expected, actual)),
      expected_(expected),
      actual_(actual) {}

PositivityViolation::PositivityViolation(std::size_t step, std::size_t feature,
                                         double factor)
    : Error(fmt::format(
          "replicator step {}: 1 + Delta for feature {} is {:.6g} (must be > 0)",
          step, feature, factor)),
      step_(step),
      feature_(feature),
      factor_(factor) {}

ZeroFitnessRow::ZeroFitnessRow(std::size_t row)
    : Error(fmt::format("row {} has zero weighted fitness; dependence undefined",
                        row)),
      row_(row) {}

}  // namespace evoweights
