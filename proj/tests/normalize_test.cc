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

#include "evoweights/normalize.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace evoweights {
namespace {

RawDataset single_column(std::vector<double> col) {
  // Second column is padding; datasets need m >= 2.
  Matrix x(col.size(), 2, 0.5);
  for (std::size_t i = 0; i < col.size(); ++i) x(i, 0) = col[i];
  return RawDataset(std::move(x));
}

NormalizationSpec with_first(Strategy s) {
  return {{{s, natural_direction(s)}, {Strategy::kIdentity, Direction::kGain}}};
}

TEST(NormalizeTest, OfficeRentShiftedInverted) {
  const NormalizedMatrix phi = testing::office_phi();
  // Row 1: rent 4348 with min 1106, max 8442.
  EXPECT_NEAR(phi(0, 0), 0.6160, 1e-4);
  EXPECT_DOUBLE_EQ(phi(0, 0), 1.0 - (4348.0 - 1106.0) / 8442.0);
  EXPECT_TRUE(phi.provenance().has_value());
}

TEST(NormalizeTest, OfficeSizeMaximizerMapsToOne) {
  const NormalizedMatrix phi = testing::office_phi();
  EXPECT_EQ(phi(2, 1), 1.0);  // 460 m2
}

TEST(NormalizeTest, IdentityLeavesBinaryColumnUnchanged) {
  const RawDataset data = testing::office_dataset();
  const NormalizedMatrix phi = testing::office_phi();
  for (std::size_t i = 0; i < data.rows(); ++i) {
    EXPECT_EQ(phi(i, 3), data.values()(i, 3));
  }
}

TEST(NormalizeTest, InvertedMaxHandExample) {
  const NormalizedMatrix phi =
      normalize(single_column({1, 2, 4}), with_first(Strategy::kInvertedMax));
  EXPECT_DOUBLE_EQ(phi(0, 0), 0.75);
  EXPECT_DOUBLE_EQ(phi(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(phi(2, 0), 0.0);
}

TEST(NormalizeTest, ShiftedInvertedDividesByMaxNotRange) {
  const NormalizedMatrix phi =
      normalize(single_column({2, 4}), with_first(Strategy::kShiftedInvertedMax));
  EXPECT_DOUBLE_EQ(phi(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(phi(1, 0), 0.5);  // min/max, not 0
}

TEST(NormalizeTest, Errors) {
  auto kind_of = [](const RawDataset& d, Strategy s) {
    try {
      normalize(d, with_first(s));
    } catch (const NormalizationError& e) {
      EXPECT_EQ(e.column(), 0u);
      return e.kind();
    }
    ADD_FAILURE() << "no error";
    return NormalizationError::Kind::kZeroColumn;
  };
  using K = NormalizationError::Kind;
  EXPECT_EQ(kind_of(single_column({0, 0}), Strategy::kMaxRatio), K::kZeroColumn);
  EXPECT_EQ(kind_of(single_column({0, 0}), Strategy::kInvertedMax), K::kZeroColumn);
  EXPECT_EQ(kind_of(single_column({0, 0}), Strategy::kShiftedInvertedMax),
            K::kZeroColumn);
  EXPECT_EQ(kind_of(single_column({1, -1}), Strategy::kMaxRatio), K::kNegativeEntry);
  EXPECT_EQ(kind_of(single_column({-3, 1}), Strategy::kShiftedInvertedMax),
            K::kNegativeEntry);
  EXPECT_EQ(kind_of(single_column({0.5, 1.5}), Strategy::kIdentity), K::kOutOfRange);
}

TEST(NormalizeTest, SpecLengthMustMatch) {
  NormalizationSpec spec{{{Strategy::kIdentity, Direction::kGain}}};
  EXPECT_THROW(normalize(single_column({0.1, 0.2}), spec), DimensionMismatch);
}

TEST(OrderPreservingTest, OfficeColumns) {
  const RawDataset data = testing::office_dataset();
  const NormalizedMatrix phi = testing::office_phi();
  EXPECT_TRUE(check_order_preserving(data, phi, 1, Direction::kGain));
  EXPECT_TRUE(check_order_preserving(data, phi, 0, Direction::kCost));
  EXPECT_FALSE(check_order_preserving(data, phi, 0, Direction::kGain));
  EXPECT_TRUE(check_order_preserving(data, phi, 3, Direction::kGain));
}

TEST(OrderPreservingTest, RentAgreesWithSortOracle) {
  // Sorting rows by rent must sort the normalized rent in reverse, with equal
  // rents (none here) mapping to equal values.
  const RawDataset data = testing::office_dataset();
  const NormalizedMatrix phi = testing::office_phi();
  std::vector<std::size_t> idx(data.rows());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) {
    return data.values()(a, 0) < data.values()(b, 0);
  });
  bool reversed = true;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const double x0 = data.values()(idx[k - 1], 0), x1 = data.values()(idx[k], 0);
    const double p0 = phi(idx[k - 1], 0), p1 = phi(idx[k], 0);
    reversed &= (x0 == x1) ? p0 == p1 : p0 > p1;
  }
  EXPECT_TRUE(reversed);
  EXPECT_EQ(check_order_preserving(data, phi, 0, Direction::kCost), reversed);
}

TEST(OrderPreservingTest, ConstantColumnEitherDirection) {
  const RawDataset data = single_column({3, 3, 3});
  for (Strategy s : {Strategy::kMaxRatio, Strategy::kInvertedMax,
                     Strategy::kShiftedInvertedMax}) {
    const NormalizedMatrix phi = normalize(data, with_first(s));
    EXPECT_TRUE(check_order_preserving(data, phi, 0, Direction::kGain));
    EXPECT_TRUE(check_order_preserving(data, phi, 0, Direction::kCost));
  }
}

TEST(OrderPreservingTest, InvalidColumn) {
  const RawDataset data = single_column({1, 2});
  const NormalizedMatrix phi = normalize(data, with_first(Strategy::kMaxRatio));
  EXPECT_THROW(check_order_preserving(data, phi, 2, Direction::kGain), InvalidArgument);
}

TEST(NormalizeProperty, RandomColumnsStayInBoundsAndPreserveOrder) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1000.0);
  std::uniform_int_distribution<int> coarse(0, 6);
  const Strategy ratio[] = {Strategy::kMaxRatio, Strategy::kInvertedMax,
                            Strategy::kShiftedInvertedMax};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = testing::random_size(rng, 1, 30);
    const std::size_t m = testing::random_size(rng, 2, 6);
    Matrix x(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        // Mix continuous values with small integers so ties occur.
        x(i, j) = trial % 2 ? u(rng) : static_cast<double>(coarse(rng));
      }
    }
    for (std::size_t j = 0; j < m; ++j) x(0, j) += 1.0;  // non-zero max
    const RawDataset data(std::move(x));
    NormalizationSpec spec;
    for (std::size_t j = 0; j < m; ++j) {
      const Strategy s = ratio[testing::random_size(rng, 0, 2)];
      spec.columns.push_back({s, natural_direction(s)});
    }
    const NormalizedMatrix phi = normalize(data, spec);  // bounds checked inside
    for (std::size_t j = 0; j < m; ++j) {
      ASSERT_TRUE(check_order_preserving(data, phi, j, spec[j].direction));
    }
  }
}

TEST(NormalizeProperty, MaxRatioAndInvertedMaxSumToOne) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = testing::random_size(rng, 1, 20);
    Matrix x(n, 2);
    for (std::size_t i = 0; i < n; ++i) x(i, 0) = x(i, 1) = u(rng) + 1e-9;
    const NormalizedMatrix phi = normalize(
        RawDataset(std::move(x)), {{{Strategy::kMaxRatio, Direction::kGain},
                                    {Strategy::kInvertedMax, Direction::kCost}}});
    for (std::size_t i = 0; i < n; ++i) ASSERT_NEAR(phi(i, 0) + phi(i, 1), 1.0, 1e-15);
  }
}

TEST(NormalizeProperty, IdentityIsOrderPreservingAsGain) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const NormalizedMatrix src = testing::random_phi(rng, 12, 3);
    const RawDataset data(src.values());
    const NormalizedMatrix phi =
        normalize(data, {std::vector<ColumnRule>(3, ColumnRule{})});
    EXPECT_EQ(phi.values(), src.values());
    for (std::size_t j = 0; j < 3; ++j) {
      ASSERT_TRUE(check_order_preserving(data, phi, j, Direction::kGain));
    }
  }
}

}  // namespace
}  // namespace evoweights
