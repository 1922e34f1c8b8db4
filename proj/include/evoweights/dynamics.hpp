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
#include <span>
#include <variant>
#include <vector>

#include "evoweights/core.hpp"

namespace evoweights {

struct IterationConfig {
  std::size_t max_iterations = 10000;
  /// Stop once the max-norm change between successive iterates drops below.
  double tolerance = 1e-12;
  /// Keep every state and delta; otherwise only the first and last state.
  bool record_trajectory = false;

  /// Throws InvalidArgument unless max_iterations >= 1 and tolerance > 0.
  void validate() const;
};

namespace termination {

struct Converged {
  std::size_t steps;
  friend bool operator==(const Converged&, const Converged&) = default;
};

struct MaxIterations {
  friend bool operator==(const MaxIterations&, const MaxIterations&) = default;
};

/// The update of state `step` failed because 1 + Delta_feature <= 0.
struct PositivityViolation {
  std::size_t step;
  std::size_t feature;
  friend bool operator==(const PositivityViolation&,
                         const PositivityViolation&) = default;
};

}  // namespace termination

using Termination =
    std::variant<termination::Converged, termination::MaxIterations,
                 termination::PositivityViolation>;

struct Trajectory {
  /// states[0] is the initial weight. With recording on, states[k] is the
  /// k-th iterate and deltas[k] = Delta(states[k]), so
  /// deltas.size() == states.size() - 1. With recording off, states holds the
  /// first and last iterate and deltas is empty.
  std::vector<WeightVector> states;
  std::vector<DeltaVector> deltas;
  Termination termination = termination::MaxIterations{};
  /// Number of updates applied.
  std::size_t steps = 0;
  /// The initial weight had a zero coordinate; that feature stays at zero.
  bool boundary_start = false;

  const WeightVector& final_state() const { return states.back(); }
  bool converged() const {
    return std::holds_alternative<termination::Converged>(termination);
  }
};

/// gamma_j * (mean_j - 1/2).
std::vector<double> delta_dom(const WeightVector& gamma, const ColumnMeans& means);

/// -2 * (gamma_j * mean_j - (1/m) * sum_s gamma_s * mean_s).
std::vector<double> delta_bal(const WeightVector& gamma, const ColumnMeans& means);

/// Both indices and their sum.
DeltaVector delta(const WeightVector& gamma, const ColumnMeans& means);

/// gamma_j * (1 + delta_j), renormalized onto the simplex.
///
/// Throws PositivityViolation (tagged with `step`) if 1 + delta_j <= 0 for
/// any feature.
WeightVector replicator_update(const WeightVector& gamma,
                               std::span<const double> delta,
                               std::size_t step = 0);

/// One replicator step driven by delta(gamma, means).
WeightVector step(const WeightVector& gamma, const ColumnMeans& means);

/// Applies step() until successive iterates differ by less than the
/// tolerance in max norm, or max_iterations updates have been applied.
///
/// A positivity failure ends the run and is recorded in the termination
/// reason; the trajectory up to that point is returned.
Trajectory iterate(const WeightVector& gamma0, const ColumnMeans& means,
                   const IterationConfig& config = {});

}  // namespace evoweights
