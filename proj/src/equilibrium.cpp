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

#include "evoweights/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "evoweights/dynamics.hpp"

namespace evoweights {

WeightVector fixed_point(const ColumnMeans& means) {
  // Reciprocals of A_j = mean_j + 1/2 lie in [2/3, 2]; the constructor
  // normalizes them.
  std::vector<double> inv(means.size());
  for (std::size_t j = 0; j < inv.size(); ++j) inv[j] = 1.0 / (means[j] + 0.5);
  return WeightVector(std::move(inv));
}

double fixed_point_residual(const WeightVector& gamma, const ColumnMeans& means) {
  const DeltaVector d = delta(gamma, means);
  double avg = 0.0;
  for (std::size_t j = 0; j < gamma.size(); ++j) avg += gamma[j] * d.total[j];
  double worst = 0.0;
  for (double t : d.total) worst = std::max(worst, std::abs(t - avg));
  return worst;
}

}  // namespace evoweights
