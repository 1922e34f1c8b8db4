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

#include "evoweights/core.hpp"
#include "evoweights/errors.hpp"
#include "evoweights/normalization_spec.hpp"

namespace evoweights {

/// A column violates the precondition of its normalization strategy.
class NormalizationError : public Error {
 public:
  enum class Kind {
    kZeroColumn,     // ratio strategy on a column whose max is 0
    kOutOfRange,     // identity column with entries outside [0,1]
    kNegativeEntry,  // ratio strategy on a column with negative entries
  };

  NormalizationError(Kind kind, std::size_t column, std::size_t row);

  Kind kind() const { return kind_; }
  std::size_t column() const { return column_; }
  /// Offending row; for kZeroColumn this is 0.
  std::size_t row() const { return row_; }

 private:
  Kind kind_;
  std::size_t column_;
  std::size_t row_;
};

/// Maps every raw column to [0,1] with the rule given in `spec`.
///
///   identity              x
///   max-ratio             x / max
///   inverted-max          1 - x / max
///   shifted-inverted-max  1 - (x - min) / max
///
/// The ratio strategies require a non-negative column with a positive
/// maximum. The shifted form divides by the maximum rather than the range,
/// so its image is [min/max, 1].
NormalizedMatrix normalize(const RawDataset& data, const NormalizationSpec& spec);

/// Brute-force O(n^2) check that column `column` of `phi` orders rows the
/// same way as the raw data (gain) or exactly reversed (cost), ties included.
bool check_order_preserving(const RawDataset& data, const NormalizedMatrix& phi,
                            std::size_t column, Direction direction);

}  // namespace evoweights
