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

#include <sstream>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace evoweights {
namespace {

RawDataset parse(const std::string& text, CsvOptions options = {}) {
  std::istringstream in(text);
  return read_csv(in, options, "test.csv");
}

std::size_t parse_error_line(const std::string& text, CsvOptions options = {}) {
  try {
    parse(text, options);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for:\n" << text;
  return 0;
}

TEST(ReadCsvTest, OfficeFixture) {
  const RawDataset d = testing::office_dataset();
  EXPECT_EQ(d.rows(), 15u);
  EXPECT_EQ(d.column_names(), (std::vector<std::string>{"rent", "size", "rooms", "balcony"}));
  EXPECT_EQ(d.values()(11, 2), 14.5);
  // Quoted label containing a comma.
  EXPECT_EQ(d.row_labels()[10],
            "Modernes Büro/Praxis in Wien: Erstbezug, 132m², U-Bahn-Nähe, Top-Ausstattung!");
}

TEST(ReadCsvTest, QuotingLineEndingsAndBlankLines) {
  const RawDataset d = parse(
      "\xEF\xBB\xBF" "label,a,b\r\n"
      "\"say \"\"hi\"\"\", 1 , 2\r\n"
      "\r\n"
      "\"multi\nline\",3,+4e0\r\n",
      {',', true});
  ASSERT_EQ(d.rows(), 2u);
  EXPECT_EQ(d.row_labels()[0], "say \"hi\"");
  EXPECT_EQ(d.row_labels()[1], "multi\nline");
  EXPECT_EQ(d.values()(0, 0), 1.0);
  EXPECT_EQ(d.values()(1, 1), 4.0);
  EXPECT_EQ(d.column_names(), (std::vector<std::string>{"a", "b"}));
}

TEST(ReadCsvTest, CustomDelimiterWithoutLabels) {
  const RawDataset d = parse("x;y\n0.5;0.25\n", {';', false});
  EXPECT_EQ(d.values()(0, 1), 0.25);
  EXPECT_EQ(d.row_labels()[0], "1");
}

TEST(ReadCsvTest, ErrorsCarryLineNumbers) {
  EXPECT_EQ(parse_error_line(""), 0u);
  EXPECT_EQ(parse_error_line("\n\n"), 0u);
  EXPECT_EQ(parse_error_line("a,b\n"), 1u);                 // no data rows
  EXPECT_EQ(parse_error_line("a\n1\n"), 1u);                // single column
  EXPECT_EQ(parse_error_line("a,a\n1,2\n"), 1u);            // duplicate names
  EXPECT_EQ(parse_error_line("a,b\n1,2\n3,x\n"), 3u);       // not a number
  EXPECT_EQ(parse_error_line("a,b\n1,2\n\n3\n"), 4u);       // ragged
  EXPECT_EQ(parse_error_line("a,b\n1,\"2\n"), 2u);          // unterminated quote
  EXPECT_EQ(parse_error_line("a,b\n1,nan\n"), 2u);          // not finite
  EXPECT_EQ(parse_error_line("a,b\n1,2\n", {',', true}), 1u);  // labels leave one column
}

TEST(ReadCsvTest, MissingFile) {
  EXPECT_THROW(read_csv_file("/nonexistent/data.csv"), ParseError);
}

NormalizationSpec spec_from(const std::string& text,
                            const std::vector<std::string>& names = {"rent", "size"}) {
  std::istringstream in(text);
  return read_column_spec(in, names, "test.spec");
}

std::size_t spec_error_line(const std::string& text) {
  try {
    spec_from(text);
  } catch (const SpecError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no SpecError for:\n" << text;
  return 999;
}

TEST(ColumnSpecTest, ParsesRulesInDatasetOrder) {
  const NormalizationSpec spec = spec_from(
      "# comment\n"
      "size = max-ratio\n"
      "\n"
      "rent = shifted-inverted-max cost  # trailing comment\n");
  ASSERT_EQ(spec.size(), 2u);
  EXPECT_EQ(spec[0], (ColumnRule{Strategy::kShiftedInvertedMax, Direction::kCost}));
  EXPECT_EQ(spec[1], (ColumnRule{Strategy::kMaxRatio, Direction::kGain}));
}

TEST(ColumnSpecTest, ExplicitDirectionOverridesDefault) {
  const NormalizationSpec spec = spec_from("rent = identity cost\nsize = inverted-max\n");
  EXPECT_EQ(spec[0].direction, Direction::kCost);
  EXPECT_EQ(spec[1].direction, Direction::kCost);
}

TEST(ColumnSpecTest, OfficeSpecFile) {
  const RawDataset d = testing::office_dataset();
  EXPECT_EQ(read_column_spec_file(testing::data_path("office.spec"), d.column_names()),
            testing::office_spec());
}

TEST(ColumnSpecTest, Errors) {
  EXPECT_EQ(spec_error_line("rent = max-ratio\nsize max-ratio\n"), 2u);
  EXPECT_EQ(spec_error_line("rent = log\nsize = max-ratio\n"), 1u);
  EXPECT_EQ(spec_error_line("rent = max-ratio up\nsize = max-ratio\n"), 1u);
  EXPECT_EQ(spec_error_line("rent = max-ratio gain extra\n"), 1u);
  EXPECT_EQ(spec_error_line("rent = max-ratio\nrent = identity\nsize = identity\n"), 2u);
  EXPECT_EQ(spec_error_line("rent = max-ratio\n"), 0u);  // size missing
  EXPECT_EQ(spec_error_line("rent = max-ratio\nsize = identity\nrooms = identity\n"), 3u);
  EXPECT_EQ(spec_error_line(" = identity\n"), 1u);
}

}  // namespace
}  // namespace evoweights
