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

#ifndef RKCD_FAMILY_HPP
#define RKCD_FAMILY_HPP

#include <optional>
#include <vector>

#include "rkcd/series.hpp"

namespace rkcd {

/// Ordered list of n x n matrices. The family is treated as closed under
/// adjoints: every solver imposes X A^* = B^* X next to X A = B X, so two
/// families with the same ordering stay paired member by member.
class MatrixFamily {
 public:
  MatrixFamily(int rank, std::vector<ComplexMatrix> members);

  /// Every coefficient A_mq, 0 <= m, q <= degree, in (m, q) lexicographic
  /// order, zeros included. Two kernels of equal degree give paired families.
  static MatrixFamily from_kernel(const KernelSeries& kernel);

  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<ComplexMatrix>& members() const noexcept { return members_; }

  /// V^* A V for every member; V has orthonormal columns.
  MatrixFamily restricted(const ComplexMatrix& basis) const;
  /// U A U^* for every member.
  MatrixFamily conjugated(const ComplexMatrix& unitary) const;

 private:
  int rank_;
  std::vector<ComplexMatrix> members_;
};

/// Orthonormal basis (trace inner product) of a matrix subspace.
struct MatrixBasis {
  std::vector<ComplexMatrix> elements;

  int dimension() const noexcept { return static_cast<int>(elements.size()); }
};

using CommutantBasis = MatrixBasis;

/// {X : X A = A X and X A^* = A^* X for all members A}, by singular-value
/// thresholding of the stacked commutation map at tol.rank.
CommutantBasis commutant_basis(const MatrixFamily& family, const Tolerances& tol = {});

bool is_irreducible(const MatrixFamily& family, const Tolerances& tol = {});

/// {X : X A_k = B_k X and X A_k^* = B_k^* X}, X of size rank(G) x rank(F),
/// where A_k, B_k are the k-th members of `from` and `to`.
MatrixBasis intertwiner_space(const MatrixFamily& from, const MatrixFamily& to, const Tolerances& tol = {});

/// For irreducible families: the unitary W with W A_k W^* = B_k, normalized
/// so its largest-modulus entry is real positive, or nullopt when no
/// intertwiner exists. Throws Inconsistent if the intertwiner space has
/// dimension above one.
std::optional<ComplexMatrix> unitary_witness_irreducible(const MatrixFamily& from, const MatrixFamily& to,
                                                         const Tolerances& tol = {});

}  // namespace rkcd

#endif  // RKCD_FAMILY_HPP
