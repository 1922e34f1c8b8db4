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
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evoweights/normalization_spec.hpp"

namespace evoweights {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::vector<double> column(std::size_t j) const;
  std::span<const double> data() const { return data_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// The raw n x m data matrix together with row and column labels.
///
/// Requires n >= 1, m >= 2 and finite entries. Empty label vectors are
/// replaced by generated labels ("1".."n", "x1".."xm").
class RawDataset {
 public:
  explicit RawDataset(Matrix values, std::vector<std::string> row_labels = {},
                      std::vector<std::string> column_names = {});

  const Matrix& values() const { return values_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& column_names() const { return column_names_; }
  std::size_t rows() const { return values_.rows(); }
  std::size_t cols() const { return values_.cols(); }

 private:
  Matrix values_;
  std::vector<std::string> row_labels_;
  std::vector<std::string> column_names_;
};

/// The normalized matrix Phi; every entry lies in [0,1].
class NormalizedMatrix {
 public:
  explicit NormalizedMatrix(
      Matrix values, std::optional<NormalizationSpec> provenance = std::nullopt);

  const Matrix& values() const { return values_; }
  double operator()(std::size_t i, std::size_t j) const { return values_(i, j); }
  std::span<const double> row(std::size_t i) const { return values_.row(i); }
  std::size_t rows() const { return values_.rows(); }
  std::size_t cols() const { return values_.cols(); }

  /// Spec that produced the matrix; empty when Phi was supplied directly.
  const std::optional<NormalizationSpec>& provenance() const {
    return provenance_;
  }

 private:
  Matrix values_;
  std::optional<NormalizationSpec> provenance_;
};

/// Column averages of Phi, each in [0,1].
class ColumnMeans {
 public:
  explicit ColumnMeans(std::vector<double> means);

  std::size_t size() const { return means_.size(); }
  double operator[](std::size_t j) const { return means_[j]; }
  std::span<const double> values() const { return means_; }

 private:
  std::vector<double> means_;
};

/// A point of the standard simplex.
///
/// Construction accepts any finite, non-negative vector with positive sum
/// and divides by that sum, so repeated multiplicative updates never drift
/// off the simplex.
class WeightVector {
 public:
  explicit WeightVector(std::vector<double> weights);
  WeightVector(std::initializer_list<double> weights)
      : WeightVector(std::vector<double>(weights)) {}

  static WeightVector uniform(std::size_t m);

  std::size_t size() const { return weights_.size(); }
  double operator[](std::size_t j) const { return weights_[j]; }
  std::span<const double> values() const { return weights_; }

  /// True iff every coordinate is strictly positive.
  bool is_interior() const;

 private:
  std::vector<double> weights_;
};

/// Max-norm distance between two vectors of equal length.
double linf_distance(std::span<const double> a, std::span<const double> b);

/// Dominance, balance and combined indices for every feature.
struct DeltaVector {
  std::vector<double> dom;
  std::vector<double> bal;
  std::vector<double> total;
};

/// (1/n) * sum_i Phi_ij for every column j.
ColumnMeans column_means(const NormalizedMatrix& phi);

}  // namespace evoweights
