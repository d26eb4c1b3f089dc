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

#ifndef RKCD_TOLERANCES_HPP
#define RKCD_TOLERANCES_HPP

namespace rkcd {

/// Numerical thresholds shared by every module.
///
/// `zero` is relative to the largest coefficient norm in the expression being
/// tested, `psd` is relative to the largest Gram eigenvalue, `rank` is the
/// relative singular-value cutoff for null spaces and `gap` the relative
/// eigenvalue gap that separates spectral clusters.
struct Tolerances {
  double zero = 1e-9;
  double psd = 1e-9;
  double rank = 1e-8;
  double gap = 1e-6;
};

}  // namespace rkcd

#endif  // RKCD_TOLERANCES_HPP
