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

#ifndef RKCD_LINALG_HPP
#define RKCD_LINALG_HPP

#include <random>

#include <Eigen/Dense>

namespace rkcd {

using Rng = std::mt19937_64;

/// 2-norm condition number; +inf for singular input, 1 for 0x0.
double condition_number(const Eigen::MatrixXcd& m);

/// Orthonormal basis (as columns) of {x : a x = 0}, with singular values
/// below `rel_tol * max(sigma_max, reference)` counted as zero. `reference`
/// keeps a numerically vanishing map from being read as full rank.
Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& a, double rel_tol, double reference = 0.0);

/// Unique positive semidefinite square root of a Hermitian matrix; eigenvalues
/// below `clamp` are set to zero.
Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& a, double clamp = 0.0);

/// n x m matrix of i.i.d. standard complex Gaussians (real and imaginary
/// parts each N(0, 1/2)).
Eigen::MatrixXcd complex_gaussian(int rows, int cols, Rng& rng);

/// Haar-distributed unitary via QR with the R-diagonal phase correction.
Eigen::MatrixXcd haar_unitary(int n, Rng& rng);

/// ||U^* U - I||_F.
double unitarity_defect(const Eigen::MatrixXcd& u);

/// Multiplies by the phase that makes the largest-modulus entry real positive.
Eigen::MatrixXcd fix_phase(const Eigen::MatrixXcd& m);

}  // namespace rkcd

#endif  // RKCD_LINALG_HPP
