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
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "evoweights/core.hpp"
#include "evoweights/dynamics.hpp"
#include "evoweights/ranking.hpp"

namespace evoweights {

enum class Mode { kIterate, kClosedForm, kBoth };

/// How the initial weight of the iteration is chosen.
struct InitialWeights {
  bool uniform = true;
  std::vector<double> explicit_weights;
};

/// Everything one invocation needs; mirrors the command line flags.
struct RunConfig {
  std::string input;
  std::string spec;  // empty: every column uses identity
  Mode mode = Mode::kBoth;
  std::size_t max_iterations = 10000;
  double tolerance = 1e-12;
  InitialWeights init;
  Objective objective = Objective::kMaximize;
  char delimiter = ',';
  bool row_labels = false;
};

/// Which report sections a command emits.
struct Sections {
  bool weights = false;
  bool rankings = false;
  bool metrics = false;
};

struct RegimeRanking {
  std::string name;
  RankReport report;
  ScalarizationCertificate certificate;
};

/// Results of running the pipeline on one dataset.
struct Analysis {
  RunConfig config;
  RawDataset data;
  NormalizationSpec spec;
  NormalizedMatrix phi;
  ColumnMeans means;
  std::vector<bool> order_preserving{};

  std::optional<Trajectory> trajectory{};
  std::optional<WeightVector> equilibrium{};
  /// Max-norm distance between the final iterate and the closed form.
  std::optional<double> gap{};

  /// Closed form when available, otherwise the final iterate.
  WeightVector reference_weight() const;

  std::vector<RegimeRanking> rankings{};

  double impact_norm = 0.0;
  double qualified_impact_norm = 0.0;
  std::vector<std::size_t> cohort{};
  std::vector<double> feature_impact{};
};

/// Parses "uniform" or a delimited list of positive weights summing to 1.
InitialWeights parse_initial_weights(const std::string& text);

/// Normalizes `data`, then runs whatever `sections` require.
///
/// Throws NormalizationError, PositivityViolation (if the iteration leaves
/// the domain of the update) and InvalidArgument for bad initial weights.
Analysis analyze(const RunConfig& config, RawDataset data,
                 NormalizationSpec spec, const Sections& sections);

/// Self-describing document; contains no timestamps, so identical inputs give
/// identical bytes.
nlohmann::ordered_json to_json(const Analysis& analysis, const Sections& sections);

/// Human-readable tables (4 decimals for weights, 6 for scores).
void write_tables(std::ostream& out, const Analysis& analysis,
                  const Sections& sections);

std::string_view to_string(Mode mode);
std::string_view to_string(Objective objective);

}  // namespace evoweights
