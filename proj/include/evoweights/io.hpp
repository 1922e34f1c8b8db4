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
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "evoweights/core.hpp"
#include "evoweights/errors.hpp"
#include "evoweights/normalization_spec.hpp"

namespace evoweights {

/// Malformed dataset input. `line` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Malformed or inconsistent column specification.
class SpecError : public Error {
 public:
  SpecError(const std::string& source, std::size_t line, const std::string& what);

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct CsvOptions {
  char delimiter = ',';
  /// First column holds row labels instead of data.
  bool row_labels = false;
};

/// Reads a delimited table whose first record is the header. Fields may be
/// double-quoted (RFC 4180 style); blank lines are skipped.
RawDataset read_csv(std::istream& in, const CsvOptions& options = {},
                    const std::string& source = "<input>");
RawDataset read_csv_file(const std::filesystem::path& path,
                         const CsvOptions& options = {});

/// Reads a column specification, one column per line:
///
///     # comment
///     rent    = shifted-inverted-max cost
///     size    = max-ratio
///
/// The direction is optional and defaults to the strategy's natural one.
/// Every name in `column_names` must appear exactly once.
NormalizationSpec read_column_spec(std::istream& in,
                                   const std::vector<std::string>& column_names,
                                   const std::string& source = "<spec>");
NormalizationSpec read_column_spec_file(
    const std::filesystem::path& path,
    const std::vector<std::string>& column_names);

}  // namespace evoweights
