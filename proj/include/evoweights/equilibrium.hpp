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

#include "evoweights/core.hpp"

namespace evoweights {

/// The unique interior equilibrium of the replicator dynamic:
/// gamma*_j proportional to 1 / (mean_j + 1/2).
WeightVector fixed_point(const ColumnMeans& means);

/// max_j |Delta_j(gamma) - sum_s gamma_s Delta_s(gamma)|.
///
/// Vanishes exactly at rest points of the update; for interior gamma that
/// is the equilibrium returned by fixed_point().
double fixed_point_residual(const WeightVector& gamma, const ColumnMeans& means);

}  // namespace evoweights
