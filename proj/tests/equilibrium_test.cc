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

#include "evoweights/equilibrium.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "evoweights/dynamics.hpp"
#include "test_support.hpp"

namespace evoweights {
namespace {

// Nested-fraction form: gamma*_j = (sum_s A_j / A_s)^-1, A = mean + 1/2.
double nested_fraction(const ColumnMeans& mu, std::size_t j) {
  double s = 0.0;
  for (std::size_t k = 0; k < mu.size(); ++k) s += (mu[j] + 0.5) / (mu[k] + 0.5);
  return 1.0 / s;
}

TEST(FixedPointTest, OfficeMatchesReferenceWeights) {
  const WeightVector star = fixed_point(column_means(testing::office_phi()));
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(star[j], testing::kOfficeEquilibrium[j], 1e-4);
  }
}

TEST(FixedPointTest, EqualMeansGiveUniformWeights) {
  for (double c : {0.0, 0.3, 1.0}) {
    const WeightVector star = fixed_point(ColumnMeans(std::vector<double>(7, c)));
    for (double w : star.values()) EXPECT_NEAR(w, 1.0 / 7.0, 1e-16);
  }
}

TEST(FixedPointTest, MinimalExample) {
  const WeightVector star = fixed_point(ColumnMeans({0.75, 0.25}));
  EXPECT_DOUBLE_EQ(star[0], 0.375);
  EXPECT_DOUBLE_EQ(star[1], 0.625);
}

TEST(FixedPointTest, XiFamilyIsLinear) {
  const double reference[][2] = {{0.375, 0.625}, {0.350, 0.650}, {0.325, 0.675},
                                  {0.300, 0.700}, {0.275, 0.725}, {0.250, 0.750}};
  for (int k = 0; k <= 5; ++k) {
    const double xi = 0.1 * k;
    const WeightVector star = fixed_point(column_means(testing::xi_family(xi)));
    EXPECT_NEAR(star[0], 0.375 - xi / 4.0, 1e-12);
    EXPECT_NEAR(star[0], reference[k][0], 5e-4);
    EXPECT_NEAR(star[1], reference[k][1], 5e-4);
  }
}

TEST(FixedPointTest, AgreesWithNestedFractionForm) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 500; ++trial) {
    const ColumnMeans mu = testing::random_means(rng, testing::random_size(rng, 2, 32));
    const WeightVector star = fixed_point(mu);
    for (std::size_t j = 0; j < mu.size(); ++j) {
      ASSERT_NEAR(star[j], nested_fraction(mu, j), 1e-15);
    }
  }
}

TEST(ResidualTest, VanishesAtFixedPoint) {
  const ColumnMeans mu = column_means(testing::office_phi());
  EXPECT_LE(fixed_point_residual(fixed_point(mu), mu), 1e-12);
}

TEST(ResidualTest, UniformOfficeWeights) {
  // Frozen from an independent evaluation of Delta at the uniform weight.
  const ColumnMeans mu = column_means(testing::office_phi());
  EXPECT_NEAR(fixed_point_residual(WeightVector::uniform(4), mu), 0.06361654164625813,
              1e-15);
}

TEST(ResidualTest, SmallPerturbation) {
  const ColumnMeans mu = column_means(testing::office_phi());
  const WeightVector star = fixed_point(mu);
  std::vector<double> w(star.values().begin(), star.values().end());
  w[0] += 1e-6;
  const double r = fixed_point_residual(WeightVector(w), mu);
  EXPECT_GT(r, 0.0);
  EXPECT_LT(r, 1e-4);
}

TEST(FixedPointProperty, MonotoneInMeansAndBoundedBelow) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t m = testing::random_size(rng, 2, 16);
    std::vector<double> raw(m);
    std::uniform_int_distribution<int> grid(0, 10);
    // Coarse grid so ties appear.
    for (double& v : raw) v = grid(rng) / 10.0;
    const ColumnMeans mu(raw);
    const WeightVector star = fixed_point(mu);
    ASSERT_TRUE(star.is_interior());
    for (std::size_t j = 0; j < m; ++j) {
      ASSERT_GE(star[j], 1.0 / (3.0 * m));
      for (std::size_t k = 0; k < m; ++k) {
        if (mu[j] < mu[k]) ASSERT_GT(star[j], star[k]);
        if (mu[j] == mu[k]) ASSERT_EQ(star[j], star[k]);
      }
    }
  }
}

TEST(FixedPointProperty, IterationFromUniformReachesClosedForm) {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    const ColumnMeans mu = testing::random_means(rng, testing::random_size(rng, 2, 16));
    const Trajectory t = iterate(WeightVector::uniform(mu.size()), mu);
    ASSERT_TRUE(t.converged());
    ASSERT_LE(linf_distance(t.final_state().values(), fixed_point(mu).values()), 1e-9);
  }
}

}  // namespace
}  // namespace evoweights
