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

#include "evoweights/ranking.hpp"

#include <algorithm>
#include <numeric>

#include "evoweights/errors.hpp"
#include "evoweights/strategies.hpp"

namespace evoweights {

bool dominates(std::span<const double> a, std::span<const double> b,
               Objective objective) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("row length", a.size(), b.size());
  }
  bool strict = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double gain = objective == Objective::kMaximize ? a[j] - b[j] : b[j] - a[j];
    if (gain < 0.0) return false;
    if (gain > 0.0) strict = true;
  }
  return strict;
}

std::vector<std::size_t> pareto_front(const NormalizedMatrix& phi,
                                      Objective objective) {
  std::vector<std::size_t> front;
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    bool dominated = false;
    for (std::size_t k = 0; k < phi.rows() && !dominated; ++k) {
      dominated = k != i && dominates(phi.row(k), phi.row(i), objective);
    }
    if (!dominated) front.push_back(i);
  }
  return front;
}

RankReport rank(const NormalizedMatrix& phi, const WeightVector& gamma,
                Objective objective) {
  RankReport report{global_fitness(phi, gamma), {}, {}, gamma, objective};
  const auto& scores = report.scores;
  report.order.resize(scores.size());
  std::iota(report.order.begin(), report.order.end(), std::size_t{0});
  std::stable_sort(report.order.begin(), report.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return objective == Objective::kMaximize ? scores[a] > scores[b]
                                                              : scores[a] < scores[b];
                   });
  report.pareto_flags.assign(scores.size(), false);
  for (std::size_t i : pareto_front(phi, objective)) report.pareto_flags[i] = true;
  return report;
}

ScalarizationCertificate certify_scalarization(const NormalizedMatrix& phi,
                                               const WeightVector& gamma,
                                               Objective objective) {
  ScalarizationCertificate cert;
  cert.interior_weight = gamma.is_interior();
  const std::vector<double> scores = global_fitness(phi, gamma);
  const double best = objective == Objective::kMaximize
                          ? *std::max_element(scores.begin(), scores.end())
                          : *std::min_element(scores.begin(), scores.end());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] == best) cert.best_rows.push_back(i);
  }
  for (std::size_t i : cert.best_rows) {
    for (std::size_t k = 0; k < phi.rows(); ++k) {
      if (k != i && dominates(phi.row(k), phi.row(i), objective)) {
        cert.dominated_row = i;
        cert.dominating_row = k;
        return cert;
      }
    }
  }
  cert.certified = true;
  return cert;
}

}  // namespace evoweights
