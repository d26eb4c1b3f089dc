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

#ifndef RKCD_NORMALIZATION_HPP
#define RKCD_NORMALIZATION_HPP

#include <vector>

#include "rkcd/series.hpp"

namespace rkcd {

/// A kernel normalized at the origin together with the gauge that produced
/// it: normalized = congruence(gauge, original, gauge) and normalized(mu, 0) = I.
struct NormalizedPair {
  KernelSeries normalized;
  HoloSeries gauge;
};

/// Gauge G(mu) = A_00^{1/2} K(mu, 0)^{-1}.
NormalizedPair normalize(const KernelSeries& kernel, const Tolerances& tol = {});

/// True iff A_m0 = delta_m0 I within tol.zero for every m.
bool is_normalized(const KernelSeries& kernel, const Tolerances& tol = {});

struct IndexedCoefficient {
  int m;
  int q;
  ComplexMatrix matrix;
};

/// Coefficients of a normalized kernel in (m, q) lexicographic order with
/// exact-zero matrices dropped. Throws NotNormalized otherwise.
std::vector<IndexedCoefficient> coefficient_family(const KernelSeries& normalized, const Tolerances& tol = {});

}  // namespace rkcd

#endif  // RKCD_NORMALIZATION_HPP
