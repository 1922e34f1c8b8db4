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

#include "evoweights/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include <fmt/format.h>

#include "evoweights/errors.hpp"

namespace evoweights {

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) {
      throw DimensionMismatch("ragged matrix row", cols_, r.size());
    }
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  Matrix out(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != out.cols_) {
      throw DimensionMismatch("ragged matrix row", out.cols_, rows[i].size());
    }
    std::copy(rows[i].begin(), rows[i].end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(i * out.cols_));
  }
  return out;
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

namespace {

void require_shape(const Matrix& values, const char* what) {
  if (values.rows() < 1) {
    throw InvalidArgument(fmt::format("{} needs at least one row", what));
  }
  if (values.cols() < 2) {
    throw InvalidArgument(fmt::format(
        "{} needs at least two columns, got {}", what, values.cols()));
  }
}

}  // namespace

RawDataset::RawDataset(Matrix values, std::vector<std::string> row_labels,
                       std::vector<std::string> column_names)
    : values_(std::move(values)),
      row_labels_(std::move(row_labels)),
      column_names_(std::move(column_names)) {
  require_shape(values_, "dataset");
  for (std::size_t i = 0; i < values_.rows(); ++i) {
    for (std::size_t j = 0; j < values_.cols(); ++j) {
      if (!std::isfinite(values_(i, j))) {
        throw InvalidArgument(
            fmt::format("dataset entry ({}, {}) is not finite", i, j));
      }
    }
  }
  if (row_labels_.empty()) {
    for (std::size_t i = 0; i < values_.rows(); ++i) {
      row_labels_.push_back(std::to_string(i + 1));
    }
  } else if (row_labels_.size() != values_.rows()) {
    throw DimensionMismatch("row label count", values_.rows(),
                            row_labels_.size());
  }
  if (column_names_.empty()) {
    for (std::size_t j = 0; j < values_.cols(); ++j) {
      column_names_.push_back("x" + std::to_string(j + 1));
    }
  } else if (column_names_.size() != values_.cols()) {
    throw DimensionMismatch("column name count", values_.cols(),
                            column_names_.size());
  }
}

NormalizedMatrix::NormalizedMatrix(Matrix values,
                                   std::optional<NormalizationSpec> provenance)
    : values_(std::move(values)), provenance_(std::move(provenance)) {
  require_shape(values_, "normalized matrix");
  for (std::size_t i = 0; i < values_.rows(); ++i) {
    for (std::size_t j = 0; j < values_.cols(); ++j) {
      const double v = values_(i, j);
      // NaN fails both comparisons.
      if (!(v >= 0.0 && v <= 1.0)) {
        throw InvalidArgument(fmt::format(
            "normalized entry ({}, {}) = {} outside [0,1]", i, j, v));
      }
    }
  }
  if (provenance_ && provenance_->size() != values_.cols()) {
    throw DimensionMismatch("normalization spec length", values_.cols(),
                            provenance_->size());
  }
}

ColumnMeans::ColumnMeans(std::vector<double> means) : means_(std::move(means)) {
  if (means_.size() < 2) {
    throw InvalidArgument(
        fmt::format("column means need at least two features, got {}",
                    means_.size()));
  }
  for (std::size_t j = 0; j < means_.size(); ++j) {
    if (!(means_[j] >= 0.0 && means_[j] <= 1.0)) {
      throw InvalidArgument(
          fmt::format("column mean {} = {} outside [0,1]", j, means_[j]));
    }
  }
}

WeightVector::WeightVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.size() < 2) {
    throw InvalidArgument(fmt::format(
        "weight vector needs at least two entries, got {}", weights_.size()));
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < weights_.size(); ++j) {
    const double w = weights_[j];
    if (!std::isfinite(w) || w < 0.0) {
      throw InvalidArgument(
          fmt::format("weight {} = {} is negative or not finite", j, w));
    }
    sum += w;
  }
  if (!(sum > 0.0)) {
    throw InvalidArgument("weight vector sums to zero");
  }
  for (double& w : weights_) w /= sum;
}

WeightVector WeightVector::uniform(std::size_t m) {
  return WeightVector(std::vector<double>(m, 1.0));
}

bool WeightVector::is_interior() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](double w) { return w > 0.0; });
}

double linf_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("linf_distance operand length", a.size(), b.size());
  }
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    d = std::max(d, std::abs(a[j] - b[j]));
  }
  return d;
}

ColumnMeans column_means(const NormalizedMatrix& phi) {
  const std::size_t n = phi.rows();
  std::vector<double> means(phi.cols(), 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = phi.row(i);
    for (std::size_t j = 0; j < means.size(); ++j) means[j] += row[j];
  }
  for (double& v : means) v /= static_cast<double>(n);
  return ColumnMeans(std::move(means));
}

}  // namespace evoweights
