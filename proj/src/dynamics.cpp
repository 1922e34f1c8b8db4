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

#include "evoweights/dynamics.hpp"

#include <optional>

#include <fmt/format.h>

#include "evoweights/errors.hpp"

namespace evoweights {

namespace {

void require_same_size(const WeightVector& gamma, const ColumnMeans& means) {
  if (gamma.size() != means.size()) {
    throw DimensionMismatch("weight vector length", means.size(), gamma.size());
  }
}

double weighted_mean_sum(const WeightVector& gamma, const ColumnMeans& means) {
  double s = 0.0;
  for (std::size_t j = 0; j < gamma.size(); ++j) s += gamma[j] * means[j];
  return s;
}

}  // namespace

void IterationConfig::validate() const {
  if (max_iterations < 1) {
    throw InvalidArgument("max_iterations must be at least 1");
  }
  if (!(tolerance > 0.0)) {
    throw InvalidArgument(fmt::format("tolerance must be positive, got {}", tolerance));
  }
}

std::vector<double> delta_dom(const WeightVector& gamma, const ColumnMeans& means) {
  require_same_size(gamma, means);
  std::vector<double> out(gamma.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = gamma[j] * (means[j] - 0.5);
  }
  return out;
}

std::vector<double> delta_bal(const WeightVector& gamma, const ColumnMeans& means) {
  require_same_size(gamma, means);
  const double m = static_cast<double>(gamma.size());
  const double avg = weighted_mean_sum(gamma, means) / m;
  std::vector<double> out(gamma.size());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = -2.0 * (gamma[j] * means[j] - avg);
  }
  return out;
}

DeltaVector delta(const WeightVector& gamma, const ColumnMeans& means) {
  DeltaVector d{delta_dom(gamma, means), delta_bal(gamma, means), {}};
  d.total.resize(d.dom.size());
  for (std::size_t j = 0; j < d.total.size(); ++j) {
    d.total[j] = d.dom[j] + d.bal[j];
  }
  return d;
}

WeightVector replicator_update(const WeightVector& gamma,
                               std::span<const double> delta, std::size_t step) {
  if (delta.size() != gamma.size()) {
    throw DimensionMismatch("delta length", gamma.size(), delta.size());
  }
  std::vector<double> next(gamma.size());
  for (std::size_t j = 0; j < next.size(); ++j) {
    const double factor = 1.0 + delta[j];
    if (!(factor > 0.0)) throw PositivityViolation(step, j, factor);
    next[j] = gamma[j] * factor;
  }
  return WeightVector(std::move(next));
}

WeightVector step(const WeightVector& gamma, const ColumnMeans& means) {
  return replicator_update(gamma, delta(gamma, means).total);
}

Trajectory iterate(const WeightVector& gamma0, const ColumnMeans& means,
                   const IterationConfig& config) {
  config.validate();
  require_same_size(gamma0, means);

  Trajectory traj;
  traj.boundary_start = !gamma0.is_interior();
  traj.states.push_back(gamma0);

  WeightVector current = gamma0;
  for (std::size_t k = 0; k < config.max_iterations; ++k) {
    DeltaVector d = delta(current, means);
    std::optional<WeightVector> next;
    try {
      next = replicator_update(current, d.total, k);
    } catch (const PositivityViolation& e) {
      traj.termination = termination::PositivityViolation{e.step(), e.feature()};
      break;
    }
    const double change = linf_distance(next->values(), current.values());
    current = std::move(*next);
    ++traj.steps;
    if (config.record_trajectory) {
      traj.deltas.push_back(std::move(d));
      traj.states.push_back(current);
    }
    if (change < config.tolerance) {
      traj.termination = termination::Converged{traj.steps};
      break;
    }
  }
  if (!config.record_trajectory && traj.steps > 0) {
    traj.states.push_back(current);
  }
  return traj;
}

}  // namespace evoweights
