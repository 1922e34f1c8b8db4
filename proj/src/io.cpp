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

#include "evoweights/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string_view>

#include <fmt/format.h>

namespace evoweights {

namespace {

std::string located(const std::string& source, std::size_t line,
                    const std::string& what) {
  if (line == 0) return fmt::format("{}: {}", source, what);
  return fmt::format("{}:{}: {}", source, line, what);
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Record {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

// Splits the whole stream into records, honouring quoted fields that may
// contain delimiters, doubled quotes and newlines.
std::vector<Record> split_records(std::istream& in, char delimiter,
                                  const std::string& source) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  if (text.starts_with("\xEF\xBB\xBF")) text.erase(0, 3);

  std::vector<Record> records;
  Record current{1, {}};
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool record_has_content = false;
  std::size_t line = 1;
  std::size_t quote_line = 0;

  auto end_field = [&] {
    current.fields.push_back(field_was_quoted ? field
                                              : std::string(trim(field)));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    end_field();
    if (record_has_content) records.push_back(std::move(current));
    current = Record{line + 1, {}};
    record_has_content = false;
  };

  for (std::size_t p = 0; p < text.size(); ++p) {
    const char c = text[p];
    if (in_quotes) {
      if (c == '"') {
        if (p + 1 < text.size() && text[p + 1] == '"') {
          field += '"';
          ++p;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"' && trim(field).empty()) {
      field.clear();
      in_quotes = true;
      field_was_quoted = true;
      record_has_content = true;
      quote_line = line;
    } else if (c == delimiter) {
      end_field();
      record_has_content = true;
    } else if (c == '\n') {
      end_record();
      ++line;
    } else if (c == '\r') {
      // CRLF line endings
    } else {
      field += c;
      if (c != ' ' && c != '\t') record_has_content = true;
    }
  }
  if (in_quotes) {
    throw ParseError(source, quote_line, "unterminated quoted field");
  }
  end_record();
  return records;
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (s.starts_with('+')) s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace

ParseError::ParseError(const std::string& source, std::size_t line,
                       const std::string& what)
    : Error(located(source, line, what)), line_(line) {}

SpecError::SpecError(const std::string& source, std::size_t line,
                     const std::string& what)
    : Error(located(source, line, what)), line_(line) {}

RawDataset read_csv(std::istream& in, const CsvOptions& options,
                    const std::string& source) {
  const std::vector<Record> records = split_records(in, options.delimiter, source);
  if (records.empty()) throw ParseError(source, 0, "input is empty");

  const Record& header = records.front();
  const std::size_t skip = options.row_labels ? 1 : 0;
  if (header.fields.size() <= skip) {
    throw ParseError(source, header.line, "header has no data columns");
  }
  std::vector<std::string> names(header.fields.begin() + static_cast<std::ptrdiff_t>(skip),
                                 header.fields.end());
  for (std::size_t j = 0; j < names.size(); ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      if (names[j] == names[k]) {
        throw ParseError(source, header.line,
                         fmt::format("duplicate column name '{}'", names[j]));
      }
    }
  }
  if (records.size() < 2) throw ParseError(source, header.line, "no data rows");
  if (names.size() < 2) {
    throw ParseError(source, header.line,
                     fmt::format("need at least two data columns, found {}",
                                 names.size()));
  }

  Matrix values(records.size() - 1, names.size());
  std::vector<std::string> labels;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const Record& rec = records[r];
    if (rec.fields.size() != header.fields.size()) {
      throw ParseError(source, rec.line,
                       fmt::format("expected {} fields, found {}",
                                   header.fields.size(), rec.fields.size()));
    }
    if (options.row_labels) labels.push_back(rec.fields.front());
    for (std::size_t j = 0; j < names.size(); ++j) {
      const std::string& cell = rec.fields[j + skip];
      const auto v = parse_number(cell);
      if (!v || !std::isfinite(*v)) {
        throw ParseError(source, rec.line,
                         fmt::format("column '{}': '{}' is not a finite number",
                                     names[j], cell));
      }
      values(r - 1, j) = *v;
    }
  }
  return RawDataset(std::move(values), std::move(labels), std::move(names));
}

RawDataset read_csv_file(const std::filesystem::path& path,
                         const CsvOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return read_csv(in, options, path.string());
}

NormalizationSpec read_column_spec(std::istream& in,
                                   const std::vector<std::string>& column_names,
                                   const std::string& source) {
  std::map<std::string, std::pair<ColumnRule, std::size_t>> rules;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = raw;
    if (const auto hash = text.find('#'); hash != std::string_view::npos) {
      text = text.substr(0, hash);
    }
    text = trim(text);
    if (text.empty()) continue;

    const auto eq = text.rfind('=');
    if (eq == std::string_view::npos) {
      throw SpecError(source, line, "expected '<column> = <strategy> [gain|cost]'");
    }
    const std::string name(trim(text.substr(0, eq)));
    if (name.empty()) throw SpecError(source, line, "missing column name");

    std::istringstream words{std::string(text.substr(eq + 1))};
    std::string strategy_word, direction_word, extra;
    words >> strategy_word >> direction_word >> extra;
    if (!extra.empty()) {
      throw SpecError(source, line, fmt::format("unexpected token '{}'", extra));
    }
    ColumnRule rule;
    if (!parse_strategy(strategy_word, rule.strategy)) {
      throw SpecError(source, line,
                      fmt::format("unknown strategy '{}' (expected identity, "
                                  "max-ratio, inverted-max or shifted-inverted-max)",
                                  strategy_word));
    }
    rule.direction = natural_direction(rule.strategy);
    if (!direction_word.empty() && !parse_direction(direction_word, rule.direction)) {
      throw SpecError(source, line,
                      fmt::format("unknown direction '{}' (expected gain or cost)",
                                  direction_word));
    }
    if (!rules.emplace(name, std::pair{rule, line}).second) {
      throw SpecError(source, line, fmt::format("column '{}' specified twice", name));
    }
  }

  NormalizationSpec spec;
  for (const std::string& name : column_names) {
    const auto it = rules.find(name);
    if (it == rules.end()) {
      throw SpecError(source, 0, fmt::format("no rule for column '{}'", name));
    }
    spec.columns.push_back(it->second.first);
    rules.erase(it);
  }
  if (!rules.empty()) {
    const auto& [name, entry] = *rules.begin();
    throw SpecError(source, entry.second,
                    fmt::format("column '{}' is not in the dataset", name));
  }
  return spec;
}

NormalizationSpec read_column_spec_file(
    const std::filesystem::path& path,
    const std::vector<std::string>& column_names) {
  std::ifstream in(path);
  if (!in) throw SpecError(path.string(), 0, "cannot open file");
  return read_column_spec(in, column_names, path.string());
}

}  // namespace evoweights
