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

#include "rkcd/normalization.hpp"

#include <algorithm>

#include "rkcd/errors.hpp"
#include "rkcd/linalg.hpp"

namespace rkcd {

NormalizedPair normalize(const KernelSeries& kernel, const Tolerances& tol) {
  const int n = kernel.rank();
  const int d = kernel.degree();
  const ComplexMatrix& a00 = kernel.coeff(0, 0);
  if (n > 0) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (a00 + a00.adjoint()), Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (!(lo > tol.psd * std::max(1.0, hi)))
      throw Error(ErrorCode::NotPositiveDefinite, "normalize: A_00 is not positive definite");
  }

  HoloSeries first_column(n, n, d);  // K(mu, 0)
  for (int m = 0; m <= d; ++m) first_column.set(m, kernel.coeff(m, 0));
  const ComplexMatrix root = psd_sqrt(a00, tol.psd * std::max(1.0, a00.norm()));
  const HoloSeries gauge = HoloSeries::constant(root, d) * invert_holo(first_column);
  return {congruence(gauge, kernel, gauge), gauge};
}

bool is_normalized(const KernelSeries& kernel, const Tolerances& tol) {
  const int n = kernel.rank();
  for (int m = 0; m <= kernel.degree(); ++m) {
    const ComplexMatrix& a = kernel.coeff(m, 0);
    const ComplexMatrix target = m == 0 ? ComplexMatrix(ComplexMatrix::Identity(n, n)) : ComplexMatrix(ComplexMatrix::Zero(n, n));
    if ((a - target).norm() > tol.zero * std::max(1.0, a.norm())) return false;
  }
  return true;
}

std::vector<IndexedCoefficient> coefficient_family(const KernelSeries& normalized, const Tolerances& tol) {
  if (!is_normalized(normalized, tol))
    throw Error(ErrorCode::NotNormalized, "coefficient_family requires a kernel normalized at the origin");
  std::vector<IndexedCoefficient> out;
  for (int m = 0; m <= normalized.degree(); ++m)
    for (int q = 0; q <= normalized.degree(); ++q) {
      const ComplexMatrix& a = normalized.coeff(m, q);
      if (a.isZero(0.0)) continue;
      out.push_back({m, q, a});
    }
  return out;
}

}  // namespace rkcd
