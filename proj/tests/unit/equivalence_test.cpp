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
#include "rkcd/equivalence.hpp"
#include "rkcd/errors.hpp"
#include "rkcd/model_zoo.hpp"

using namespace rkcd;

namespace {

KernelSeries sum_of(const std::vector<KernelSeries>& parts) { return direct_sum(parts); }

}  // namespace

TEST(AreEquivalent, SzegoWithItself) {
  const EquivalenceVerdict v = are_equivalent(szego_kernel(6), szego_kernel(6), 0);
  ASSERT_EQ(v.verdict, Verdict::Equivalent);
  EXPECT_NEAR(std::abs(v.witness.coeff(0)(0, 0)), 1.0, 1e-12);
  for (int m = 1; m <= 6; ++m) EXPECT_LE(std::abs(v.witness.coeff(m)(0, 0)), 1e-12);
}

TEST(AreEquivalent, ScaledSzego) {
  const KernelSeries s = szego_kernel(6);
  const EquivalenceVerdict v = are_equivalent(s, s.scaled(2.0), 0);
  ASSERT_TRUE(v.equivalent());
  EXPECT_NEAR(std::abs(v.witness.coeff(0)(0, 0)), 1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_LE(relative_residual(oracle::congruence(v.witness, s.scaled(2.0), v.witness), s), 1e-12);
}

TEST(AreEquivalent, SzegoBergmanDiffer) {
  const EquivalenceVerdict v = are_equivalent(szego_kernel(8), bergman_kernel(8), 0);
  EXPECT_EQ(v.verdict, Verdict::NotEquivalent);
  EXPECT_FALSE(v.reason.empty());
}

TEST(AreEquivalent, DiagonalWeightsSeparated) {
  const std::vector<double> a{1.0, 1.5, 2.0, 2.5, 3.0, 3.5};
  const std::vector<double> b{1.0, 1.5 + 1e-5, 2.0, 2.5, 3.0, 3.5};
  EXPECT_EQ(are_equivalent(diagonal_kernel(a), diagonal_kernel(b), 0).verdict, Verdict::NotEquivalent);
}

TEST(AreEquivalent, PermutedDirectSum) {
  const KernelSeries sb = sum_of({szego_kernel(6), bergman_kernel(6)});
  const KernelSeries bs = sum_of({bergman_kernel(6), szego_kernel(6)});
  const EquivalenceVerdict v = are_equivalent(sb, bs, 0);
  ASSERT_TRUE(v.equivalent());
  ASSERT_EQ(v.permutation.size(), 2u);
  EXPECT_LE(relative_residual(oracle::congruence(v.witness, bs, v.witness), sb), 1e-10);
  EXPECT_NEAR(std::abs(v.witness.coeff(0)(0, 1)), 1.0, 1e-10);
  EXPECT_NEAR(std::abs(v.witness.coeff(0)(0, 0)), 0.0, 1e-10);
}

TEST(AreEquivalent, ShapeMismatch) {
  const KernelSeries ss = sum_of({szego_kernel(6), szego_kernel(6)});
  const KernelSeries sb = sum_of({szego_kernel(6), bergman_kernel(6)});
  EXPECT_EQ(are_equivalent(ss, sb, 0).verdict, Verdict::NotEquivalent);
}

TEST(AreEquivalent, RankMismatchThrows) {
  EXPECT_THROW(are_equivalent(szego_kernel(4), sum_of({szego_kernel(4), szego_kernel(4)}), 0), Error);
}

TEST(AreEquivalent, Symmetric) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const KernelSeries k = random_psd_kernel(2, 4, 6, seed);
    const KernelSeries t = congruence(random_holo(2, 6, seed + 40), k, random_holo(2, 6, seed + 40));
    EXPECT_TRUE(are_equivalent(k, t, 1).equivalent());
    EXPECT_TRUE(are_equivalent(t, k, 1).equivalent());
    const KernelSeries other = random_psd_kernel(2, 4, 6, seed + 100);
    EXPECT_EQ(are_equivalent(k, other, 1).equivalent(), are_equivalent(other, k, 1).equivalent());
  }
}

TEST(AreEquivalent, Deterministic) {
  const KernelSeries k = random_psd_kernel(3, 5, 6, 12);
  const HoloSeries phi = random_holo(3, 6, 13);
  const KernelSeries t = congruence(phi, k, phi);
  const EquivalenceVerdict a = are_equivalent(t, k, 4);
  const EquivalenceVerdict b = are_equivalent(t, k, 4);
  EXPECT_EQ(a.residual, b.residual);
  for (int m = 0; m <= 6; ++m) EXPECT_EQ(a.witness.coeff(m), b.witness.coeff(m));
}

TEST(Kk1, TrivialCases) {
  const KernelSeries k = random_psd_kernel(2, 3, 6, 1);
  const Kk1Report id = kk1_check(k, k, HoloSeries::identity(2, 6));
  EXPECT_TRUE(id.holds);
  EXPECT_LE(id.residual, 1e-9);
  const Kk1Report c = kk1_check(k, k, HoloSeries::constant(ComplexMatrix::Identity(2, 2) * 3.0, 6));
  EXPECT_TRUE(c.holds);
  EXPECT_NEAR(c.m.coeff(0, 0)(0, 0).real(), 1.0 / 3.0, 1e-12);
}

TEST(Kk1, SzegoBergmanFails) {
  const Kk1Report r = kk1_check(szego_kernel(8), bergman_kernel(8), HoloSeries::identity(1, 8));
  EXPECT_FALSE(r.holds);
  EXPECT_NEAR(r.residual, 1.0, 1e-12);
  EXPECT_EQ(r.leading_p, 1);
  EXPECT_EQ(r.leading_q, 1);
  // M = (1 - x)^{-1}
  for (int k = 0; k <= 4; ++k) EXPECT_NEAR(r.m.coeff(k, k)(0, 0).real(), 1.0, 1e-12);
}

TEST(Kk1, CongruenceGivesAntiholomorphicM) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const KernelSeries kt = random_psd_kernel(2, 4, 7, seed);
    const HoloSeries psi = random_holo(2, 7, 30 + seed);
    const Kk1Report r = kk1_check(kt, congruence(psi, kt, psi), psi);
    EXPECT_TRUE(r.holds) << r.residual;
    // M = Psi(lambda)^*
    for (int q = 0; q <= 3; ++q) EXPECT_LE((r.m.coeff(0, q) - psi.coeff(q).adjoint()).norm(), 1e-9);
  }
}

TEST(Structure, IdentityWitness) {
  const IntertwinerReport r = intertwiner_structure(HoloSeries::identity(2, 4), std::vector<int>{1, 1}, std::vector<int>{1, 1});
  EXPECT_TRUE(r.passed);
  EXPECT_LE((r.c - Eigen::Matrix2d::Identity()).norm(), 1e-14);
  EXPECT_EQ(r.classes[0][0], BlockClass::Invertible);
  EXPECT_EQ(r.classes[0][1], BlockClass::Zero);
}

TEST(Structure, BlockDiagonalWitness) {
  const HoloSeries a = random_holo(2, 5, 1);
  const HoloSeries b = random_holo(1, 5, 2);
  HoloSeries phi(3, 3, 5);
  for (int m = 0; m <= 5; ++m) {
    ComplexMatrix c = ComplexMatrix::Zero(3, 3);
    c.topLeftCorner(2, 2) = a.coeff(m);
    c(2, 2) = b.coeff(m)(0, 0);
    phi.set(m, c);
  }
  const IntertwinerReport r = intertwiner_structure(phi, std::vector<int>{2, 1}, std::vector<int>{2, 1});
  EXPECT_TRUE(r.passed);
  EXPECT_LE((r.c - Eigen::Matrix2d::Identity()).norm(), 1e-10);
}

TEST(Structure, SwappedDirectSum) {
  const KernelSeries sb = sum_of({szego_kernel(6), bergman_kernel(6)});
  const KernelSeries bs = sum_of({bergman_kernel(6), szego_kernel(6)});
  const EquivalenceVerdict v = are_equivalent(sb, bs, 0);
  ASSERT_TRUE(v.equivalent());
  const IntertwinerReport r = intertwiner_structure(v.witness, std::vector<int>{1, 1}, std::vector<int>{1, 1});
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.permutation_pattern);
  EXPECT_NEAR(r.c(0, 1), 1.0, 1e-9);
  EXPECT_NEAR(r.c(1, 0), 1.0, 1e-9);
  EXPECT_NEAR(r.c(0, 0), 0.0, 1e-9);
  EXPECT_EQ(r.classes[0][0], BlockClass::Zero);
  EXPECT_EQ(r.classes[0][1], BlockClass::Invertible);
}

TEST(Structure, BadPartitionThrows) {
  EXPECT_THROW(intertwiner_structure(HoloSeries::identity(2, 3), std::vector<int>{1, 2}, std::vector<int>{1, 1}), Error);
}
