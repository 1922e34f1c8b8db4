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
#include <vector>

#include "evoweights/core.hpp"

namespace evoweights {

// Per-row ("organism") and per-cell ("gene") view of the update indices.
// The dynamics only ever use the column-averaged forms; these exist so the
// averages can be checked against their per-row origin.

/// Row shares mu_ij = gamma_j Phi_ij / r_i; each row sums to 1.
class DependenceMatrix {
 public:
  explicit DependenceMatrix(Matrix mu);

  const Matrix& mu() const { return mu_; }
  double operator()(std::size_t i, std::size_t j) const { return mu_(i, j); }
  std::size_t rows() const { return mu_.rows(); }
  std::size_t cols() const { return mu_.cols(); }

 private:
  Matrix mu_;
};

/// r_i = sum_j gamma_j Phi_ij for every row.
std::vector<double> global_fitness(const NormalizedMatrix& phi,
                                   const WeightVector& gamma);

/// Throws ZeroFitnessRow for the first row with r_i = 0.
DependenceMatrix dependence(const NormalizedMatrix& phi, const WeightVector& gamma);

/// gamma_j (Phi_ij - 1/2).
Matrix gene_strategy(const NormalizedMatrix& phi, const WeightVector& gamma);

/// -2 r_i (mu_ij - 1/m), evaluated as -2 (gamma_j Phi_ij - r_i / m) so that
/// rows with r_i = 0 give zero instead of 0/0.
Matrix organism_strategy(const NormalizedMatrix& phi, const WeightVector& gamma);

/// Column averages of gene_strategy and organism_strategy and their sum.
DeltaVector aggregated_delta(const NormalizedMatrix& phi, const WeightVector& gamma);

}  // namespace evoweights
