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
#include <optional>
#include <span>
#include <vector>

#include "evoweights/core.hpp"

namespace evoweights {

/// Whether every feature of Phi is to be maximized or minimized.
enum class Objective { kMaximize, kMinimize };

struct RankReport {
  std::vector<double> scores;
  /// Row indices, best first (highest score under kMaximize, lowest under
  /// kMinimize); equal scores keep ascending row order.
  std::vector<std::size_t> order;
  std::vector<bool> pareto_flags;
  WeightVector weight_used;
  Objective objective = Objective::kMaximize;
};

/// True iff row `a` dominates row `b`: at least as good in every feature and
/// strictly better in one.
bool dominates(std::span<const double> a, std::span<const double> b,
               Objective objective = Objective::kMaximize);

/// Scores rows by the weighted sum and sorts them. Pareto flags come from
/// pareto_front() on the same matrix.
RankReport rank(const NormalizedMatrix& phi, const WeightVector& gamma,
                Objective objective = Objective::kMaximize);

/// Ascending indices of the non-dominated rows, by O(n^2 m) comparison.
std::vector<std::size_t> pareto_front(const NormalizedMatrix& phi,
                                      Objective objective = Objective::kMaximize);

struct ScalarizationCertificate {
  bool certified = false;
  /// Every row attaining the best score.
  std::vector<std::size_t> best_rows;
  /// On failure: a best row and a row dominating it.
  std::optional<std::size_t> dominated_row;
  std::optional<std::size_t> dominating_row;
  /// The guarantee only holds for interior weights.
  bool interior_weight = false;
};

/// Checks that every best-scoring row is Pareto optimal.
ScalarizationCertificate certify_scalarization(
    const NormalizedMatrix& phi, const WeightVector& gamma,
    Objective objective = Objective::kMaximize);

}  // namespace evoweights
