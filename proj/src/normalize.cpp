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

#include "evoweights/normalize.hpp"

#include <algorithm>
#include <string>

#include <fmt/format.h>

namespace evoweights {

namespace {

std::string describe(NormalizationError::Kind kind, std::size_t column,
                     std::size_t row) {
  switch (kind) {
    case NormalizationError::Kind::kZeroColumn:
      return fmt::format("column {}: maximum is zero, ratio normalization undefined",
                         column);
    case NormalizationError::Kind::kOutOfRange:
      return fmt::format("column {}, row {}: identity column outside [0,1]",
                         column, row);
    case NormalizationError::Kind::kNegativeEntry:
      return fmt::format("column {}, row {}: negative value under ratio normalization",
                         column, row);
  }
  return "normalization error";
}

}  // namespace

NormalizationError::NormalizationError(Kind kind, std::size_t column,
                                       std::size_t row)
    : Error(describe(kind, column, row)),
      kind_(kind),
      column_(column),
      row_(row) {}

NormalizedMatrix normalize(const RawDataset& data, const NormalizationSpec& spec) {
  const Matrix& x = data.values();
  if (spec.size() != x.cols()) {
    throw DimensionMismatch("normalization spec length", x.cols(), spec.size());
  }
  Matrix phi(x.rows(), x.cols());
  for (std::size_t j = 0; j < x.cols(); ++j) {
    const Strategy strategy = spec[j].strategy;
    const std::vector<double> col = x.column(j);

    if (strategy == Strategy::kIdentity) {
      for (std::size_t i = 0; i < col.size(); ++i) {
        if (col[i] < 0.0 || col[i] > 1.0) {
          throw NormalizationError(NormalizationError::Kind::kOutOfRange, j, i);
        }
        phi(i, j) = col[i];
      }
      continue;
    }

    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i] < 0.0) {
        throw NormalizationError(NormalizationError::Kind::kNegativeEntry, j, i);
      }
    }
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    const double min = *lo;
    const double max = *hi;
    if (max <= 0.0) {
      throw NormalizationError(NormalizationError::Kind::kZeroColumn, j, 0);
    }
    for (std::size_t i = 0; i < col.size(); ++i) {
      switch (strategy) {
        case Strategy::kMaxRatio:
          phi(i, j) = col[i] / max;
          break;
        case Strategy::kInvertedMax:
          phi(i, j) = 1.0 - col[i] / max;
          break;
        case Strategy::kShiftedInvertedMax:
          phi(i, j) = 1.0 - (col[i] - min) / max;
          break;
        case Strategy::kIdentity:
          break;
      }
    }
  }
  return NormalizedMatrix(std::move(phi), spec);
}

bool check_order_preserving(const RawDataset& data, const NormalizedMatrix& phi,
                            std::size_t column, Direction direction) {
  if (column >= data.cols() || column >= phi.cols()) {
    throw InvalidArgument(fmt::format("column index {} out of range", column));
  }
  if (data.rows() != phi.rows()) {
    throw DimensionMismatch("row count of normalized matrix", data.rows(),
                            phi.rows());
  }
  const Matrix& x = data.values();
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t k = 0; k < x.rows(); ++k) {
      const bool raw_le = x(i, column) <= x(k, column);
      const bool norm_ok = direction == Direction::kGain
                               ? phi(i, column) <= phi(k, column)
                               : phi(i, column) >= phi(k, column);
      if (raw_le != norm_ok) return false;
    }
  }
  return true;
}

}  // namespace evoweights
