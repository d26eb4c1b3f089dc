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

#ifndef RKCD_EQUIVALENCE_HPP
#define RKCD_EQUIVALENCE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rkcd/commutant.hpp"
#include "rkcd/family.hpp"
#include "rkcd/series.hpp"

namespace rkcd {

enum class Verdict { Equivalent, NotEquivalent, Undecided, VerificationFailed };

const char* to_string(Verdict verdict) noexcept;

/// Shape of a decomposition: (rank n_i, multiplicity m_i) per component.
using Shape = std::vector<std::pair<int, int>>;

struct EquivalenceVerdict {
  Verdict verdict = Verdict::NotEquivalent;
  /// Degree at which the verdict holds (the common truncation degree).
  int degree = 0;
  /// K_T = Phi K_S Phi^*; populated for Equivalent and Undecided.
  HoloSeries witness;
  /// Constant unitary V with V N_S V^* = N_T between the normalized kernels.
  ComplexMatrix unitary;
  /// permutation[i] = index of the component of S matched with component i of T.
  std::vector<int> permutation;
  Shape shape_t;
  Shape shape_s;
  double residual = 0.0;
  std::string reason;

  bool equivalent() const noexcept { return verdict == Verdict::Equivalent; }
};

/// Residuals in (10 tol.zero, kUndecidedCeiling] give Undecided.
inline constexpr double kUndecidedCeiling = 1e-4;

/// Normalizes both kernels, decomposes their coefficient families, matches
/// components by unitary witnesses and pulls the constant unitary back
/// through the normalizing gauges. Throws on invalid input or rank mismatch;
/// kernels of different degree are compared at the smaller one.
EquivalenceVerdict are_equivalent(const KernelSeries& kernel_t, const KernelSeries& kernel_s, std::uint64_t seed,
                                  const Tolerances& tol = {});

struct Kk1Report {
  bool holds = false;
  /// max_{p >= 1} ||M_pq|| / max(1, max ||M_pq||).
  double residual = 0.0;
  /// Coefficient index of the largest offending term.
  int leading_p = 0;
  int leading_q = 0;
  BiSeries m;
};

/// M = K_T(lambda, lambda)^{-1} Psi(lambda)^{-1} K_S(lambda, lambda); holds iff
/// M has no lambda-dependence up to tol.zero. With K_S = Psi K_T Psi^*, M = Psi^*.
Kk1Report kk1_check(const KernelSeries& kernel_t, const KernelSeries& kernel_s, const HoloSeries& psi,
                    const Tolerances& tol = {});

enum class BlockClass { Zero, Invertible, Singular };

const char* to_string(BlockClass c) noexcept;

struct IntertwinerReport {
  std::vector<int> partition_t;
  std::vector<int> partition_s;
  HoloSeries psi;
  /// c(i, j) from Psi_ij Phi_ji = c I; rows index blocks of S, columns blocks of T.
  Eigen::MatrixXd c;
  /// classes[j][i] classifies Phi_ji (block row j of T, block column i of S).
  std::vector<std::vector<BlockClass>> classes;
  double inverse_residual = 0.0;
  double scalar_residual = 0.0;
  double row_sum_residual = 0.0;
  double column_sum_residual = 0.0;
  /// Exactly one nonzero block per block row and column, each invertible.
  bool permutation_pattern = false;
  bool passed = false;
};

/// Psi = Phi^{-1}, sliced into blocks; Phi has rows split by partition_t and
/// columns by partition_s.
IntertwinerReport intertwiner_structure(const HoloSeries& phi, std::span<const int> partition_t,
                                        std::span<const int> partition_s, const Tolerances& tol = {});

}  // namespace rkcd

#endif  // RKCD_EQUIVALENCE_HPP
