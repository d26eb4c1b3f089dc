/*
  Copyright (c) 2026 The rkcd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rkcd/errors.hpp"
#include "rkcd/model_zoo.hpp"
#include "rkcd/normalization.hpp"

using namespace rkcd;

TEST(Normalize, SzegoIsFixed) {
  const NormalizedPair p = normalize(szego_kernel(6));
  EXPECT_LE(relative_residual(p.normalized, szego_kernel(6)), 1e-15);
  EXPECT_LE(relative_residual(p.gauge, HoloSeries::identity(1, 6)), 1e-15);
}

TEST(Normalize, ScaledSzego) {
  const NormalizedPair p = normalize(szego_kernel(6).scaled(2.0));
  EXPECT_LE(relative_residual(p.normalized, szego_kernel(6)), 1e-15);
  EXPECT_NEAR(p.gauge.coeff(0)(0, 0).real(), 1.0 / std::sqrt(2.0), 1e-15);
  for (int m = 1; m <= 6; ++m) EXPECT_EQ(std::abs(p.gauge.coeff(m)(0, 0)), 0.0);
}

TEST(Normalize, UndoesOnePlusMuGauge) {
  const NormalizedPair p = normalize(oracle::one_plus_mu_szego(6));
  EXPECT_LE(relative_residual(p.normalized, szego_kernel(6)), 1e-14);
}

TEST(Normalize, GaugeReproducesOutput) {
  const KernelSeries k = random_psd_kernel(3, 5, 6, 8);
  const NormalizedPair p = normalize(k);
  EXPECT_LE(relative_residual(oracle::congruence(p.gauge, k, p.gauge), p.normalized), 1e-12);
  EXPECT_TRUE(is_normalized(p.normalized));
  EXPECT_LE(relative_residual(normalize(p.normalized).normalized, p.normalized), 1e-12);
}

TEST(Normalize, SingularConstantTermThrows) {
  KernelSeries k(2, 2);
  ComplexMatrix a = ComplexMatrix::Zero(2, 2);
  a(0, 0) = 1.0;
  k.set(0, 0, a);
  EXPECT_THROW(normalize(k), Error);
}

TEST(IsNormalized, Examples) {
  EXPECT_TRUE(is_normalized(szego_kernel(4)));
  EXPECT_FALSE(is_normalized(szego_kernel(4).scaled(2.0)));
  EXPECT_FALSE(is_normalized(oracle::one_plus_mu_szego(4)));
}

TEST(CoefficientFamily, SzegoBergman) {
  const std::vector<KernelSeries> parts{szego_kernel(4), bergman_kernel(4)};
  const std::vector<IndexedCoefficient> f = coefficient_family(direct_sum(parts));
  ASSERT_EQ(f.size(), 5u);
  for (const IndexedCoefficient& c : f) {
    EXPECT_EQ(c.m, c.q);
    EXPECT_EQ(c.matrix(1, 1), Complex(c.m + 1.0));
  }
}

TEST(CoefficientFamily, JetHasOffDiagonalMatrices) {
  const std::vector<IndexedCoefficient> f = coefficient_family(normalize(jet_kernel(exp_weights(7), 5)).normalized);
  bool off_diagonal = false;
  for (const IndexedCoefficient& c : f) off_diagonal |= std::abs(c.matrix(0, 1)) > 1e-9;
  EXPECT_TRUE(off_diagonal);
}

TEST(CoefficientFamily, RequiresNormalizedInput) {
  EXPECT_THROW(coefficient_family(szego_kernel(3).scaled(3.0)), Error);
}
