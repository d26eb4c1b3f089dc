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

#include "rkcd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rkcd {

double condition_number(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 1.0;
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const auto& s = svd.singularValues();
  const double smin = s(s.size() - 1);
  if (smin <= 0.0 || m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return s(0) / smin;
}

Eigen::MatrixXcd null_space(const Eigen::MatrixXcd& a, double rel_tol, double reference) {
  const Eigen::Index n = a.cols();
  if (n == 0) return Eigen::MatrixXcd(0, 0);
  if (a.rows() == 0) return Eigen::MatrixXcd::Identity(n, n);

  // Tall stacks are compressed to their n x n triangular factor first; the
  // singular values (and right singular vectors) are unchanged.
  Eigen::MatrixXcd reduced;
  if (a.rows() > n) {
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
    reduced = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  } else {
    reduced = a;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(reduced, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = rel_tol * std::max(s.size() > 0 ? s(0) : 0.0, reference);
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > cutoff) ++rank;
  return svd.matrixV().rightCols(n - rank);
}

Eigen::MatrixXcd psd_sqrt(const Eigen::MatrixXcd& a, double clamp) {
  if (a.size() == 0) return a;
  const Eigen::MatrixXcd sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(sym);
  Eigen::VectorXd root = eig.eigenvalues();
  for (Eigen::Index i = 0; i < root.size(); ++i) root(i) = root(i) <= clamp ? 0.0 : std::sqrt(root(i));
  return eig.eigenvectors() * root.asDiagonal() * eig.eigenvectors().adjoint();
}

Eigen::MatrixXcd complex_gaussian(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  Eigen::MatrixXcd out(rows, cols);
  // Column-major fill order is part of the determinism contract.
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      out(i, j) = {re, im};
    }
  return out;
}

Eigen::MatrixXcd haar_unitary(int n, Rng& rng) {
  if (n == 0) return Eigen::MatrixXcd(0, 0);
  const Eigen::MatrixXcd z = complex_gaussian(n, n, rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double mag = std::abs(d);
    if (mag > 0.0) q.col(j) *= d / mag;
  }
  return q;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.cols(), u.cols())).norm();
}

Eigen::MatrixXcd fix_phase(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return m;
  Eigen::Index bi = 0, bj = 0;
  double best = -1.0;
  // Column-major scan; ties resolve to the first entry encountered.
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (std::abs(m(i, j)) > best * (1.0 + 1e-12)) {
        best = std::abs(m(i, j));
        bi = i;
        bj = j;
      }
  if (best <= 0.0) return m;
  return m * (std::abs(m(bi, bj)) / m(bi, bj));
}

}  // namespace rkcd
