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

/// (m/(m-1)) * sum_j |gamma*_j - 1/m| * mean_j.
double impact_norm(const ColumnMeans& means, const WeightVector& gamma_star);

/// Rows forming the top decile by row average: the ceil(n/10) rows with the
/// largest (1/m) sum_j Phi_ij, at least one, ties going to the lower index.
/// Returned in rank order.
std::vector<std::size_t> top_decile_cohort(const NormalizedMatrix& phi);

/// impact_norm with the column means replaced by the means over
/// top_decile_cohort(phi).
double qualified_impact_norm(const NormalizedMatrix& phi,
                             const WeightVector& gamma_star);

/// zeta_j = (max_i Phi_ij - min_i Phi_ij) * gamma*_j.
std::vector<double> feature_impact(const NormalizedMatrix& phi,
                                   const WeightVector& gamma_star);

}  // namespace evoweights
