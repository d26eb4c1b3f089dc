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

#include "rkcd/family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rkcd/errors.hpp"
#include "rkcd/linalg.hpp"

namespace rkcd {

namespace {

// Witnesses must satisfy X^* X = c I to this relative accuracy.
constexpr double kUnitaryTolerance = 1e-6;

// Rows of X -> X A - B X followed by X -> X A^* - B^* X, for X of size p x q
// stored column-major.
void append_equations(ComplexMatrix& map, Eigen::Index& row, const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index p = b.rows();
  const Eigen::Index q = a.rows();
  for (Eigen::Index j = 0; j < q; ++j)
    for (Eigen::Index i = 0; i < p; ++i, ++row) {
      for (Eigen::Index l = 0; l < q; ++l) map(row, i + l * p) += a(l, j);
      for (Eigen::Index k = 0; k < p; ++k) map(row, k + j * p) -= b(i, k);
    }
}

MatrixBasis solve_intertwining(const std::vector<ComplexMatrix>& from, const std::vector<ComplexMatrix>& to,
                               Eigen::Index p, Eigen::Index q, const Tolerances& tol) {
  const Eigen::Index unknowns = p * q;
  MatrixBasis out;
  if (unknowns == 0) return out;

  ComplexMatrix map = ComplexMatrix::Zero(static_cast<Eigen::Index>(2 * from.size()) * unknowns, unknowns);
  Eigen::Index row = 0;
  double scale = 0.0;
  for (std::size_t k = 0; k < from.size(); ++k) {
    scale = std::max({scale, from[k].norm(), to[k].norm()});
    append_equations(map, row, from[k], to[k]);
    append_equations(map, row, from[k].adjoint(), to[k].adjoint());
  }
  const ComplexMatrix kernel = null_space(map, tol.rank, scale);
  for (Eigen::Index c = 0; c < kernel.cols(); ++c)
    out.elements.emplace_back(Eigen::Map<const ComplexMatrix>(kernel.col(c).data(), p, q));
  return out;
}

}  // namespace

MatrixFamily::MatrixFamily(int rank, std::vector<ComplexMatrix> members) : rank_(rank), members_(std::move(members)) {
  if (rank < 0) throw Error(ErrorCode::InvalidArgument, "family rank must be non-negative");
  for (const ComplexMatrix& m : members_)
    if (m.rows() != rank || m.cols() != rank)
      throw Error(ErrorCode::RankMismatch, "family member is not " + std::to_string(rank) + "x" +
                                               std::to_string(rank));
}

MatrixFamily MatrixFamily::from_kernel(const KernelSeries& kernel) {
  std::vector<ComplexMatrix> members;
  members.reserve(static_cast<std::size_t>((kernel.degree() + 1) * (kernel.degree() + 1)));
  for (int m = 0; m <= kernel.degree(); ++m)
    for (int q = 0; q <= kernel.degree(); ++q) members.push_back(kernel.coeff(m, q));
  return MatrixFamily(kernel.rank(), std::move(members));
}

MatrixFamily MatrixFamily::restricted(const ComplexMatrix& basis) const {
  if (basis.rows() != rank_) throw Error(ErrorCode::RankMismatch, "restriction basis has the wrong row count");
  std::vector<ComplexMatrix> out;
  out.reserve(members_.size());
  for (const ComplexMatrix& m : members_) out.push_back(basis.adjoint() * m * basis);
  return MatrixFamily(static_cast<int>(basis.cols()), std::move(out));
}

MatrixFamily MatrixFamily::conjugated(const ComplexMatrix& unitary) const {
  if (unitary.cols() != rank_) throw Error(ErrorCode::RankMismatch, "conjugating matrix has the wrong column count");
  std::vector<ComplexMatrix> out;
  out.reserve(members_.size());
  for (const ComplexMatrix& m : members_) out.push_back(unitary * m * unitary.adjoint());
  return MatrixFamily(static_cast<int>(unitary.rows()), std::move(out));
}

CommutantBasis commutant_basis(const MatrixFamily& family, const Tolerances& tol) {
  if (family.size() == 0) {
    // Everything commutes with the empty family.
    const int n = family.rank();
    CommutantBasis out;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        ComplexMatrix e = ComplexMatrix::Zero(n, n);
        e(i, j) = 1.0;
        out.elements.push_back(std::move(e));
      }
    return out;
  }
  return solve_intertwining(family.members(), family.members(), family.rank(), family.rank(), tol);
}

bool is_irreducible(const MatrixFamily& family, const Tolerances& tol) {
  return commutant_basis(family, tol).dimension() == 1;
}

MatrixBasis intertwiner_space(const MatrixFamily& from, const MatrixFamily& to, const Tolerances& tol) {
  if (from.size() != to.size())
    throw Error(ErrorCode::InvalidArgument, "intertwiner_space: families have different lengths (" +
                                                std::to_string(from.size()) + " vs " + std::to_string(to.size()) +
                                                ")");
  return solve_intertwining(from.members(), to.members(), to.rank(), from.rank(), tol);
}

std::optional<ComplexMatrix> unitary_witness_irreducible(const MatrixFamily& from, const MatrixFamily& to,
                                                         const Tolerances& tol) {
  if (from.rank() != to.rank()) return std::nullopt;
  const MatrixBasis space = intertwiner_space(from, to, tol);
  if (space.dimension() == 0) return std::nullopt;
  if (space.dimension() > 1)
    throw Error(ErrorCode::Inconsistent, "intertwiner space between irreducible families has dimension " +
                                             std::to_string(space.dimension()));
  const ComplexMatrix& x = space.elements.front();
  const Eigen::Index n = x.cols();
  const double c = (x.adjoint() * x).trace().real() / static_cast<double>(n);
  if (!(c > 0.0)) return std::nullopt;
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  if ((x.adjoint() * x - c * id).norm() > kUnitaryTolerance * c ||
      (x * x.adjoint() - c * id).norm() > kUnitaryTolerance * c)
    return std::nullopt;
  return fix_phase(x / std::sqrt(c));
}

}  // namespace rkcd
