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

#include "evoweights/strategies.hpp"

#include <cmath>
#include <utility>

#include <fmt/format.h>

#include "evoweights/errors.hpp"

namespace evoweights {

namespace {

void require_same_width(const NormalizedMatrix& phi, const WeightVector& gamma) {
  if (phi.cols() != gamma.size()) {
    throw DimensionMismatch("weight vector length", phi.cols(), gamma.size());
  }
}

std::vector<double> column_average(const Matrix& a) {
  std::vector<double> out(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out[j] += a(i, j);
  }
  for (double& v : out) v /= static_cast<double>(a.rows());
  return out;
}

}  // namespace

DependenceMatrix::DependenceMatrix(Matrix mu) : mu_(std::move(mu)) {
  for (std::size_t i = 0; i < mu_.rows(); ++i) {
    double sum = 0.0;
    for (double v : mu_.row(i)) sum += v;
    if (std::abs(sum - 1.0) > 1e-12) {
      throw InvalidArgument(
          fmt::format("dependence row {} sums to {}, expected 1", i, sum));
    }
  }
}

std::vector<double> global_fitness(const NormalizedMatrix& phi,
                                   const WeightVector& gamma) {
  require_same_width(phi, gamma);
  std::vector<double> r(phi.rows(), 0.0);
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    const auto row = phi.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) r[i] += gamma[j] * row[j];
  }
  return r;
}

DependenceMatrix dependence(const NormalizedMatrix& phi, const WeightVector& gamma) {
  const std::vector<double> r = global_fitness(phi, gamma);
  Matrix mu(phi.rows(), phi.cols());
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    if (!(r[i] > 0.0)) throw ZeroFitnessRow(i);
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      mu(i, j) = gamma[j] * phi(i, j) / r[i];
    }
  }
  return DependenceMatrix(std::move(mu));
}

Matrix gene_strategy(const NormalizedMatrix& phi, const WeightVector& gamma) {
  require_same_width(phi, gamma);
  Matrix out(phi.rows(), phi.cols());
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      out(i, j) = gamma[j] * (phi(i, j) - 0.5);
    }
  }
  return out;
}

Matrix organism_strategy(const NormalizedMatrix& phi, const WeightVector& gamma) {
  const std::vector<double> r = global_fitness(phi, gamma);
  const double m = static_cast<double>(phi.cols());
  Matrix out(phi.rows(), phi.cols());
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      out(i, j) = -2.0 * (gamma[j] * phi(i, j) - r[i] / m);
    }
  }
  return out;
}

DeltaVector aggregated_delta(const NormalizedMatrix& phi, const WeightVector& gamma) {
  DeltaVector d{column_average(gene_strategy(phi, gamma)),
                column_average(organism_strategy(phi, gamma)),
                {}};
  d.total.resize(d.dom.size());
  for (std::size_t j = 0; j < d.total.size(); ++j) {
    d.total[j] = d.dom[j] + d.bal[j];
  }
  return d;
}

}  // namespace evoweights
