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

#ifndef RKCD_COMMUTANT_HPP
#define RKCD_COMMUTANT_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rkcd/family.hpp"

namespace rkcd {

/// One isotypic component: `multiplicity` copies of an irreducible family of
/// size `rank`. Copy b occupies the columns `blocks[b]` of the conjugating
/// unitary, and every copy restricts the input family to `representative`.
struct Component {
  int rank = 0;
  int multiplicity = 0;
  std::vector<ComplexMatrix> blocks;
  MatrixFamily representative{0, {}};
};

struct Decomposition {
  int t = 0;
  std::vector<Component> components;
  /// Columns are the concatenated blocks, component by component.
  ComplexMatrix unitary;
  int commutant_dim = 0;
  /// Max over members of ||U^* A U - blockdiag|| / ||A|| together with the
  /// unitarity defect of U.
  double residual = 0.0;
  bool verified = false;
  std::string failure;
};

/// Splits a family into irreducible blocks with a seeded random Hermitian
/// element of the commutant, then groups equivalent blocks. Check `verified`:
/// a failed verification is reported in `failure`, not thrown.
Decomposition decompose(const MatrixFamily& family, std::uint64_t seed, const Tolerances& tol = {});

/// Sum of squared multiplicities.
int commutant_dimension_report(std::span<const int> multiplicities);

}  // namespace rkcd

#endif  // RKCD_COMMUTANT_HPP
