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

#include "evoweights/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>

#include "evoweights/errors.hpp"

namespace evoweights {

namespace {

void require_width(std::size_t expected, const WeightVector& gamma) {
  if (gamma.size() != expected) {
    throw DimensionMismatch("weight vector length", expected, gamma.size());
  }
}

double weighted_deviation(std::span<const double> strength,
                          const WeightVector& gamma_star) {
  const double m = static_cast<double>(gamma_star.size());
  double sum = 0.0;
  for (std::size_t j = 0; j < gamma_star.size(); ++j) {
    sum += std::abs(gamma_star[j] - 1.0 / m) * strength[j];
  }
  return m / (m - 1.0) * sum;
}

}  // namespace

double impact_norm(const ColumnMeans& means, const WeightVector& gamma_star) {
  require_width(means.size(), gamma_star);
  return weighted_deviation(means.values(), gamma_star);
}

std::vector<std::size_t> top_decile_cohort(const NormalizedMatrix& phi) {
  const std::size_t n = phi.rows();
  std::vector<double> row_mean(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (double v : phi.row(i)) row_mean[i] += v;
    row_mean[i] /= static_cast<double>(phi.cols());
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return row_mean[a] > row_mean[b];
  });
  // Integer ceil(n / 10); 0.1 * n rounds up past an integer for some n.
  const std::size_t size = std::max<std::size_t>(1, (n + 9) / 10);
  order.resize(size);
  return order;
}

double qualified_impact_norm(const NormalizedMatrix& phi,
                             const WeightVector& gamma_star) {
  require_width(phi.cols(), gamma_star);
  const std::vector<std::size_t> cohort = top_decile_cohort(phi);
  std::vector<double> cohort_mean(phi.cols(), 0.0);
  for (std::size_t i : cohort) {
    for (std::size_t j = 0; j < phi.cols(); ++j) cohort_mean[j] += phi(i, j);
  }
  for (double& v : cohort_mean) v /= static_cast<double>(cohort.size());
  return weighted_deviation(cohort_mean, gamma_star);
}

std::vector<double> feature_impact(const NormalizedMatrix& phi,
                                   const WeightVector& gamma_star) {
  require_width(phi.cols(), gamma_star);
  std::vector<double> zeta(phi.cols());
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    const std::vector<double> col = phi.values().column(j);
    const auto [lo, hi] = std::minmax_element(col.begin(), col.end());
    zeta[j] = (*hi - *lo) * gamma_star[j];
  }
  return zeta;
}

}  // namespace evoweights
