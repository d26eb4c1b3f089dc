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

#ifndef RKCD_MODEL_ZOO_HPP
#define RKCD_MODEL_ZOO_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rkcd/series.hpp"

namespace rkcd {

/// Rank-one kernel sum a_k (mu conj(lambda))^k; degree = weights.size() - 1.
KernelSeries diagonal_kernel(std::span<const double> weights);

/// a_k = binom(k + alpha - 1, k); alpha = 1 is the Szego kernel, alpha = 2 the Bergman kernel.
std::vector<double> bergman_weights(double alpha, int degree);
std::vector<double> exp_weights(int degree);

KernelSeries szego_kernel(int degree);
KernelSeries bergman_kernel(int degree, double alpha = 2.0);
KernelSeries exp_kernel(int degree);

/// [[K, dK/dconj(lambda)], [dK/dmu, d^2K/dmu dconj(lambda)]] for the rank-one
/// kernel with the given weights. Needs weights a_0 .. a_{degree+1}, degree >= 2.
KernelSeries jet_kernel(std::span<const double> weights, int degree);

/// One kernel repeated `multiplicity` times in a direct sum.
struct ComponentSpec {
  KernelSeries kernel;
  int multiplicity = 1;
};

/// Parses "szego", "bergman", "bergman<alpha>", "exp", "jet-szego",
/// "jet-bergman<alpha>", "jet-exp", each with an optional "*m" suffix.
ComponentSpec parse_component(const std::string& token, int degree);

KernelSeries direct_sum(std::span<const ComponentSpec> components);

/// Hidden structure of a disguised instance. Component i has rank ranks[i]
/// and multiplicity multiplicities[i]; the kernel is U0 (sum) U0^*.
struct GroundTruth {
  int t = 0;
  std::vector<int> ranks;
  std::vector<int> multiplicities;
  ComplexMatrix unitary;
};

struct DisguisedInstance {
  KernelSeries kernel;
  GroundTruth truth;
};

/// Components with equal kernels are merged into one entry of the truth.
DisguisedInstance disguised_direct_sum(std::span<const ComponentSpec> components, std::uint64_t seed);

inline constexpr double kRandomPsdShift = 1e-3;

/// F(mu) F(lambda)^* for a seeded n x r series F with coefficients
/// decay^m G_m, G_m standard complex Gaussian; F_0 is augmented by
/// sqrt(kRandomPsdShift) I so that A_00 = F_0 F_0^* + kRandomPsdShift I.
KernelSeries random_psd_kernel(int n, int r, int degree, std::uint64_t seed, double decay = 0.5);

/// Phi_0 = Haar unitary + 0.2 G_0, Phi_m = decay^m G_m / sqrt(n); invertible
/// constant term with probability one.
HoloSeries random_holo(int n, int degree, std::uint64_t seed, double decay = 0.5);

enum class GeneratorKind { Szego, Bergman, Exp, DiagonalWeights, Jet, DirectSum, Disguised, RandomPsd };

std::optional<GeneratorKind> parse_generator_kind(const std::string& name);
const char* to_string(GeneratorKind kind) noexcept;

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Szego;
  int degree = 8;
  double alpha = 2.0;
  std::vector<double> weights;
  /// Jet base: a component token without multiplicity.
  std::string base = "szego";
  /// Direct-sum and disguised components as tokens.
  std::vector<std::string> components;
  int rank = 1;
  /// Width r of the random factor; 0 means rank + 2.
  int width = 0;
  std::uint64_t seed = 0;
};

struct GeneratedKernel {
  KernelSeries kernel;
  std::optional<GroundTruth> truth;
};

GeneratedKernel generate(const GeneratorSpec& spec);

}  // namespace rkcd

#endif  // RKCD_MODEL_ZOO_HPP
