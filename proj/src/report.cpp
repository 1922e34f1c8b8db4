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

#include "evoweights/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include <fmt/format.h>

#include "evoweights/equilibrium.hpp"
#include "evoweights/errors.hpp"
#include "evoweights/metrics.hpp"
#include "evoweights/normalize.hpp"

namespace evoweights {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::string_view kToolName = "evoweights";
constexpr std::string_view kFormatVersion = "1";

std::vector<double> to_vector(std::span<const double> s) {
  return {s.begin(), s.end()};
}

Json termination_json(const Termination& t) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, termination::Converged>) {
          return {{"reason", "converged"}, {"steps", v.steps}};
        } else if constexpr (std::is_same_v<T, termination::MaxIterations>) {
          return {{"reason", "max-iterations"}};
        } else {
          return {{"reason", "positivity-violation"},
                  {"step", v.step},
                  {"feature", v.feature}};
        }
      },
      t);
}

std::string termination_text(const Termination& t) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, termination::Converged>) {
          return fmt::format("converged after {} steps", v.steps);
        } else if constexpr (std::is_same_v<T, termination::MaxIterations>) {
          return "stopped at the iteration limit";
        } else {
          return fmt::format("positivity violated at step {} (feature {})", v.step,
                             v.feature);
        }
      },
      t);
}

std::string join_fixed(std::span<const double> values, int decimals,
                       std::size_t width) {
  std::string out;
  for (double v : values) out += fmt::format(" {:>{}.{}f}", v, width, decimals);
  return out;
}

std::string format_raw(double v) { return fmt::format("{:g}", v); }

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::kIterate:
      return "iterate";
    case Mode::kClosedForm:
      return "closed-form";
    case Mode::kBoth:
      return "both";
  }
  return "both";
}

std::string_view to_string(Objective objective) {
  return objective == Objective::kMaximize ? "max" : "min";
}

WeightVector Analysis::reference_weight() const {
  if (equilibrium) return *equilibrium;
  return trajectory->final_state();
}

InitialWeights parse_initial_weights(const std::string& text) {
  InitialWeights init;
  if (text.empty() || text == "uniform") return init;
  init.uniform = false;
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ';', ',');
  std::istringstream in(normalized);
  std::string item;
  double sum = 0.0;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
      throw InvalidArgument(fmt::format("initial weight '{}' is not a number", item));
    }
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw InvalidArgument(fmt::format(
          "initial weight {} must be strictly positive (interior start)", v));
    }
    init.explicit_weights.push_back(v);
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidArgument(fmt::format("initial weights sum to {}, expected 1", sum));
  }
  return init;
}

Analysis analyze(const RunConfig& config, RawDataset data, NormalizationSpec spec,
                 const Sections& sections) {
  NormalizedMatrix phi = normalize(data, spec);
  ColumnMeans means = column_means(phi);
  Analysis a{.config = config,
             .data = std::move(data),
             .spec = std::move(spec),
             .phi = std::move(phi),
             .means = std::move(means)};
  const std::size_t m = a.phi.cols();

  for (std::size_t j = 0; j < m; ++j) {
    a.order_preserving.push_back(
        check_order_preserving(a.data, a.phi, j, a.spec[j].direction));
  }

  if (config.mode != Mode::kIterate) a.equilibrium = fixed_point(a.means);

  if (config.mode != Mode::kClosedForm) {
    WeightVector start = WeightVector::uniform(m);
    if (!config.init.uniform) {
      if (config.init.explicit_weights.size() != m) {
        throw DimensionMismatch("initial weight count", m,
                                config.init.explicit_weights.size());
      }
      start = WeightVector(config.init.explicit_weights);
    }
    IterationConfig iteration{config.max_iterations, config.tolerance, true};
    Trajectory traj = iterate(start, a.means, iteration);
    if (const auto* bad = std::get_if<termination::PositivityViolation>(&traj.termination)) {
      const double factor =
          1.0 + delta(traj.final_state(), a.means).total[bad->feature];
      throw PositivityViolation(bad->step, bad->feature, factor);
    }
    a.trajectory = std::move(traj);
    if (a.equilibrium) {
      a.gap = linf_distance(a.trajectory->final_state().values(),
                            a.equilibrium->values());
    }
  }

  const WeightVector reference = a.reference_weight();
  if (sections.rankings) {
    for (auto [name, weight] :
         {std::pair{std::string("uniform"), WeightVector::uniform(m)},
          std::pair{std::string("equilibrium"), reference}}) {
      a.rankings.push_back({name, rank(a.phi, weight, config.objective),
                            certify_scalarization(a.phi, weight, config.objective)});
    }
  }
  if (sections.metrics) {
    a.impact_norm = evoweights::impact_norm(a.means, reference);
    a.qualified_impact_norm = evoweights::qualified_impact_norm(a.phi, reference);
    a.cohort = top_decile_cohort(a.phi);
    a.feature_impact = evoweights::feature_impact(a.phi, reference);
  }
  return a;
}

nlohmann::ordered_json to_json(const Analysis& a, const Sections& sections) {
  Json doc;
  doc["meta"] = {{"tool", kToolName}, {"format_version", kFormatVersion}};

  const RunConfig& c = a.config;
  Json init = c.init.uniform ? Json("uniform") : Json(c.init.explicit_weights);
  doc["config"] = {{"input", c.input},
                   {"spec", c.spec},
                   {"mode", to_string(c.mode)},
                   {"max_iterations", c.max_iterations},
                   {"tolerance", c.tolerance},
                   {"init", init},
                   {"objective", to_string(c.objective)},
                   {"delimiter", std::string(1, c.delimiter)},
                   {"row_labels", c.row_labels}};

  Json columns = Json::array();
  for (std::size_t j = 0; j < a.phi.cols(); ++j) {
    columns.push_back({{"name", a.data.column_names()[j]},
                       {"strategy", to_string(a.spec[j].strategy)},
                       {"direction", to_string(a.spec[j].direction)},
                       {"order_preserving", static_cast<bool>(a.order_preserving[j])}});
  }
  doc["columns"] = std::move(columns);
  doc["rows"] = a.data.row_labels();
  doc["means"] = to_vector(a.means.values());

  if (sections.weights) {
    if (a.trajectory) {
      Json states = Json::array();
      for (const auto& s : a.trajectory->states) states.push_back(to_vector(s.values()));
      Json deltas = Json::array();
      for (const auto& d : a.trajectory->deltas) {
        deltas.push_back({{"dom", d.dom}, {"bal", d.bal}, {"total", d.total}});
      }
      doc["trajectory"] = {{"steps", a.trajectory->steps},
                           {"termination", termination_json(a.trajectory->termination)},
                           {"boundary_start", a.trajectory->boundary_start},
                           {"states", std::move(states)},
                           {"deltas", std::move(deltas)}};
    }
    if (a.equilibrium) {
      doc["equilibrium"] = {
          {"weights", to_vector(a.equilibrium->values())},
          {"residual", fixed_point_residual(*a.equilibrium, a.means)}};
    }
    if (a.gap) doc["gap_linf"] = *a.gap;
  }

  if (sections.rankings) {
    Json rankings = {{"objective", to_string(c.objective)},
                     {"dominance_on", "normalized"},
                     {"regimes", Json::array()}};
    for (const auto& r : a.rankings) {
      Json entries = Json::array();
      for (std::size_t pos = 0; pos < r.report.order.size(); ++pos) {
        const std::size_t i = r.report.order[pos];
        entries.push_back({{"rank", pos + 1},
                           {"row", i},
                           {"label", a.data.row_labels()[i]},
                           {"score", r.report.scores[i]},
                           {"pareto", static_cast<bool>(r.report.pareto_flags[i])}});
      }
      Json cert = {{"certified", r.certificate.certified},
                   {"best_rows", r.certificate.best_rows},
                   {"interior_weight", r.certificate.interior_weight}};
      if (r.certificate.dominating_row) {
        cert["dominated_row"] = *r.certificate.dominated_row;
        cert["dominating_row"] = *r.certificate.dominating_row;
      }
      rankings["regimes"].push_back({{"name", r.name},
                                     {"weights", to_vector(r.report.weight_used.values())},
                                     {"ranking", std::move(entries)},
                                     {"certificate", std::move(cert)}});
    }
    doc["rankings"] = std::move(rankings);
  }

  if (sections.metrics) {
    doc["metrics"] = {{"impact_norm", a.impact_norm},
                      {"qualified_impact_norm", a.qualified_impact_norm},
                      {"cohort", a.cohort},
                      {"feature_impact", a.feature_impact}};
  }
  return doc;
}

void write_tables(std::ostream& out, const Analysis& a, const Sections& sections) {
  const auto& names = a.data.column_names();
  const std::size_t m = names.size();
  std::size_t width = 8;
  for (const auto& n : names) width = std::max(width, n.size());

  std::string header = fmt::format("{:<12}", "");
  for (const auto& n : names) header += fmt::format(" {:>{}}", n, width);

  out << fmt::format("Dataset: {} rows x {} columns, objective: {}\n", a.data.rows(),
                     m, to_string(a.config.objective));
  out << "\nNormalization\n";
  for (std::size_t j = 0; j < m; ++j) {
    out << fmt::format("  {:<{}}  {:<22} {:<5} order-preserving: {}\n", names[j],
                       width, to_string(a.spec[j].strategy),
                       to_string(a.spec[j].direction),
                       a.order_preserving[j] ? "yes" : "NO");
  }
  out << "\nColumn means\n" << header << '\n';
  out << fmt::format("{:<12}", "mean") << join_fixed(a.means.values(), 4, width) << '\n';

  if (sections.weights) {
    if (a.trajectory) {
      const Trajectory& t = *a.trajectory;
      out << "\nWeight trajectory (" << termination_text(t.termination) << ")\n"
          << header << '\n';
      for (std::size_t k = 0; k < t.states.size(); ++k) {
        out << fmt::format("{:<12}", fmt::format("gamma^{}", k))
            << join_fixed(t.states[k].values(), 4, width) << '\n';
      }
      if (t.boundary_start) {
        out << "warning: initial weight on the simplex boundary; zero weights "
               "stay zero\n";
      }
    }
    if (a.equilibrium) {
      if (!a.trajectory) out << "\nEquilibrium\n" << header << '\n';
      out << fmt::format("{:<12}", "gamma*")
          << join_fixed(a.equilibrium->values(), 4, width) << '\n';
    }
    if (a.gap) out << fmt::format("\nmax |gamma^final - gamma*| = {:.3e}\n", *a.gap);
  }

  if (sections.rankings && a.rankings.size() == 2) {
    const auto& u = a.rankings[0];
    const auto& e = a.rankings[1];
    out << "\nRankings (P = Pareto optimal on normalized data)\n";
    out << fmt::format("{:>4} | {:>11} {:<24} | {:>11} {}\n", "rank", u.name,
                       "  raw values", e.name, "  raw values");
    const auto describe = [&](std::size_t i) {
      std::string s;
      for (std::size_t j = 0; j < m; ++j) {
        s += (j ? " " : "") + format_raw(a.data.values()(i, j));
      }
      return s;
    };
    for (std::size_t pos = 0; pos < u.report.order.size(); ++pos) {
      const std::size_t iu = u.report.order[pos];
      const std::size_t ie = e.report.order[pos];
      out << fmt::format("{:>4} | {:>9.6f} {:1} {:<24} | {:>9.6f} {:1} {}\n",
                         pos + 1, u.report.scores[iu],
                         u.report.pareto_flags[iu] ? "P" : "", describe(iu),
                         e.report.scores[ie], e.report.pareto_flags[ie] ? "P" : "",
                         describe(ie));
    }
    for (const auto& r : a.rankings) {
      out << fmt::format("best row under {} weights is Pareto optimal: {}\n", r.name,
                         r.certificate.certified ? "yes" : "NO");
    }
  }

  if (sections.metrics) {
    out << "\nMetrics\n";
    out << fmt::format("  impact norm            {:.4f}\n", a.impact_norm);
    out << fmt::format("  qualified impact norm  {:.4f}  top-decile cohort:\n",
                       a.qualified_impact_norm);
    for (std::size_t i : a.cohort) {
      out << fmt::format("    row {:>3}  {}\n", i, a.data.row_labels()[i]);
    }
    out << fmt::format("{:<12}", "  zeta") << join_fixed(a.feature_impact, 5, width)
        << '\n';
  }
}

}  // namespace evoweights
