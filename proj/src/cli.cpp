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

#include "evoweights/cli.hpp"

#include <cstdint>
#include <fstream>
#include <optional>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "evoweights/errors.hpp"
#include "evoweights/io.hpp"
#include "evoweights/normalize.hpp"
#include "evoweights/report.hpp"

namespace evoweights {

namespace {

struct Options {
  RunConfig run;
  std::string init = "uniform";
  std::string mode = "both";
  std::string format = "tabular";
  std::string out;
  std::string delimiter = ",";
  bool minimize = false;
};

void add_common(CLI::App& cmd, Options& o) {
  cmd.add_option("--input,-i", o.run.input, "Delimited data file, header row first")
      ->required();
  cmd.add_option("--spec,-s", o.run.spec,
                 "Column spec file (default: identity for every column)");
  cmd.add_option("--mode", o.mode, "iterate, closed-form or both")
      ->check(CLI::IsMember({"iterate", "closed-form", "both"}))
      ->default_val("both");
  cmd.add_option("--iters", o.run.max_iterations, "Maximum number of replicator steps")
      ->check(CLI::PositiveNumber)
      ->default_val(10000);
  cmd.add_option("--tol", o.run.tolerance,
                 "Stop when successive weights differ by less (max norm)")
      ->check(CLI::PositiveNumber)
      ->default_val(1e-12);
  cmd.add_option("--init", o.init,
                 "'uniform' or comma separated interior weights summing to 1")
      ->default_val("uniform");
  auto* min = cmd.add_flag("--min", o.minimize, "Minimize every normalized feature");
  cmd.add_flag(
         "--max", [&o](std::int64_t) { o.minimize = false; },
         "Maximize every normalized feature (default)")
      ->excludes(min);
  cmd.add_option("--format,-f", o.format, "tabular or structured")
      ->check(CLI::IsMember({"tabular", "structured"}))
      ->default_val("tabular");
  cmd.add_option("--out,-o", o.out, "Write the report here instead of stdout");
  cmd.add_option("--delimiter,-d", o.delimiter, "Field delimiter (one character)")
      ->default_val(",");
  cmd.add_flag("--row-labels", o.run.row_labels, "First column holds row labels");
}

int fail(std::ostream& err, int code, const std::string& message) {
  err << "error: " << message << '\n';
  return code;
}

struct Command {
  const char* name;
  const char* help;
  Sections sections;
};

constexpr Command kCommands[] = {
    {"weights", "Column means, weight trajectory and equilibrium", {true, false, false}},
    {"rank", "Rankings under uniform and equilibrium weights", {false, true, false}},
    {"metrics", "Impact norms and feature impacts", {false, false, true}},
    {"report", "Everything above in one document", {true, true, true}},
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Feature weights from a replicator dynamic on the simplex", "evoweights"};
  app.require_subcommand(1);

  // Only one subcommand is ever parsed, so they can share one option set.
  Options o;
  std::vector<CLI::App*> subs;
  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(*sub, o);
    subs.push_back(sub);
  }

  // CLI11 consumes a vector of arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    // --help surfaces as a ParseError with exit code 0.
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Sections sections;
  for (std::size_t k = 0; k < subs.size(); ++k) {
    if (subs[k]->parsed()) sections = kCommands[k].sections;
  }

  if (o.delimiter.size() != 1) {
    return fail(err, kExitUsage, "--delimiter must be a single character");
  }
  o.run.delimiter = o.delimiter.front();
  o.run.mode = o.mode == "iterate"       ? Mode::kIterate
               : o.mode == "closed-form" ? Mode::kClosedForm
                                         : Mode::kBoth;
  o.run.objective = o.minimize ? Objective::kMinimize : Objective::kMaximize;
  try {
    o.run.init = parse_initial_weights(o.init);
  } catch (const Error& e) {
    return fail(err, kExitUsage, e.what());
  }

  std::optional<RawDataset> data;
  try {
    data = read_csv_file(o.run.input, {o.run.delimiter, o.run.row_labels});
  } catch (const Error& e) {
    return fail(err, kExitParse, e.what());
  }

  NormalizationSpec spec;
  try {
    if (o.run.spec.empty()) {
      spec.columns.assign(data->cols(), ColumnRule{});
    } else {
      spec = read_column_spec_file(o.run.spec, data->column_names());
    }
  } catch (const Error& e) {
    return fail(err, kExitSpec, e.what());
  }

  std::optional<Analysis> analysis;
  try {
    analysis = analyze(o.run, *data, spec, sections);
  } catch (const NormalizationError& e) {
    return fail(err, kExitSpec,
                fmt::format("column '{}': {}", data->column_names()[e.column()],
                            e.what()));
  } catch (const PositivityViolation& e) {
    return fail(err, kExitDynamics,
                fmt::format("feature '{}': {}", data->column_names()[e.feature()],
                            e.what()));
  } catch (const Error& e) {
    return fail(err, kExitUsage, e.what());
  }

  for (std::size_t j = 0; j < analysis->order_preserving.size(); ++j) {
    if (!analysis->order_preserving[j]) {
      err << "warning: normalization of column '" << data->column_names()[j]
          << "' does not preserve order in its declared direction; Pareto flags "
             "refer to the normalized data only\n";
    }
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::binary);
    if (!file) return fail(err, kExitOutput, "cannot open " + o.out + " for writing");
  }
  std::ostream& sink = o.out.empty() ? out : file;
  if (o.format == "tabular") {
    write_tables(sink, *analysis, sections);
  } else {
    sink << to_json(*analysis, sections).dump(2) << '\n';
  }
  sink.flush();
  if (!sink) return fail(err, kExitOutput, "failed writing the report");
  return kExitOk;
}

}  // namespace evoweights
