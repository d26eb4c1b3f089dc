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

#ifndef RKCD_SERIES_HPP
#define RKCD_SERIES_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rkcd/tolerances.hpp"

namespace rkcd {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Truncated matrix-valued kernel K(mu, lambda) = sum A_mq mu^m conj(lambda)^q
/// over 0 <= m, q <= degree. Always full box: every stored coefficient is exact.
class KernelSeries {
 public:
  KernelSeries() : KernelSeries(0, 0) {}
  KernelSeries(int rank, int degree);

  int rank() const noexcept { return rank_; }
  int degree() const noexcept { return degree_; }

  const ComplexMatrix& coeff(int m, int q) const { return coeffs_[index(m, q)]; }
  void set(int m, int q, const ComplexMatrix& value);

  ComplexMatrix eval(Complex mu, Complex lambda) const;
  KernelSeries truncated(int degree) const;
  KernelSeries scaled(double factor) const;

  /// Largest Frobenius norm over all coefficients.
  double max_norm() const;

 private:
  std::size_t index(int m, int q) const;

  int rank_;
  int degree_;
  std::vector<ComplexMatrix> coeffs_;
};

/// Truncated holomorphic matrix function Phi(mu) = sum Phi_m mu^m.
class HoloSeries {
 public:
  HoloSeries() : HoloSeries(0, 0, 0) {}
  HoloSeries(int rows, int cols, int degree);

  static HoloSeries identity(int n, int degree);
  static HoloSeries constant(const ComplexMatrix& value, int degree);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  int degree() const noexcept { return degree_; }

  const ComplexMatrix& coeff(int m) const { return coeffs_.at(static_cast<std::size_t>(m)); }
  void set(int m, const ComplexMatrix& value);

  ComplexMatrix eval(Complex mu) const;
  HoloSeries truncated(int degree) const;
  /// d/dmu; the result has degree max(degree - 1, 0).
  HoloSeries derivative() const;
  /// The series sum Phi_m^* mu^m (coefficientwise adjoint).
  HoloSeries coefficient_adjoint() const;
  double max_norm() const;

 private:
  int rows_;
  int cols_;
  int degree_;
  std::vector<ComplexMatrix> coeffs_;
};

HoloSeries operator*(const HoloSeries& a, const HoloSeries& b);

/// Validity box of a BiSeries: the coefficients C_pq with p <= hol and
/// q <= antihol are exact images of the untruncated computation. A negative
/// extent means the box is empty.
struct Box {
  int hol = -1;
  int antihol = -1;

  bool empty() const noexcept { return hol < 0 || antihol < 0; }
  friend bool operator==(const Box&, const Box&) = default;
};

Box intersect(Box a, Box b) noexcept;

/// General truncated series in (lambda, conj(lambda)). Storage coincides with
/// the validity box, so no operation can expose coefficients beyond it.
class BiSeries {
 public:
  BiSeries() : BiSeries(0, 0, Box{}) {}
  BiSeries(int rows, int cols, Box box);

  /// Lifts Phi(lambda) with zero conj(lambda)-dependence, exact up to `antihol`.
  static BiSeries from_holo(const HoloSeries& phi, int antihol);
  /// Lifts Phi(lambda)^* = sum Phi_m^* conj(lambda)^m, exact up to `hol`.
  static BiSeries from_holo_adjoint(const HoloSeries& phi, int hol);
  static BiSeries identity(int n, Box box);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Box box() const noexcept { return box_; }
  bool empty() const noexcept { return box_.empty(); }

  const ComplexMatrix& coeff(int p, int q) const { return coeffs_[index(p, q)]; }
  void set(int p, int q, const ComplexMatrix& value);

  BiSeries restricted(Box box) const;
  /// d/dlambda.
  BiSeries d_hol() const;
  /// d/dconj(lambda).
  BiSeries d_antihol() const;
  /// Multiplicative inverse; requires an invertible constant term.
  BiSeries inverse() const;
  /// Scalar (1x1) series of traces.
  BiSeries trace() const;
  ComplexMatrix eval(Complex lambda) const;
  double max_norm() const;

  BiSeries& operator+=(const BiSeries& other);
  BiSeries& operator-=(const BiSeries& other);
  BiSeries& operator*=(Complex factor);

 private:
  std::size_t index(int p, int q) const;

  int rows_;
  int cols_;
  Box box_;
  std::vector<ComplexMatrix> coeffs_;
};

BiSeries operator*(const BiSeries& a, const BiSeries& b);
BiSeries operator+(BiSeries a, const BiSeries& b);
BiSeries operator-(BiSeries a, const BiSeries& b);
BiSeries operator*(Complex factor, BiSeries a);
BiSeries commutator(const BiSeries& a, const BiSeries& b);

/// max ||a_pq - b_pq|| / max(1, max ||a_pq||, max ||b_pq||) over the common
/// validity box. Returns 0 on an empty intersection.
double relative_residual(const BiSeries& a, const BiSeries& b);
double relative_residual(const KernelSeries& a, const KernelSeries& b);
double relative_residual(const HoloSeries& a, const HoloSeries& b);

// --- kernel algebra -------------------------------------------------------

ComplexMatrix eval(const KernelSeries& kernel, Complex mu, Complex lambda);

/// Psi(mu) K(mu, lambda) Phi(lambda)^*, truncated to the smallest operand degree.
KernelSeries congruence(const HoloSeries& psi, const KernelSeries& kernel, const HoloSeries& phi);

KernelSeries direct_sum(std::span<const KernelSeries> kernels);

/// Conjugates every coefficient by a constant matrix: A_mq -> U A_mq U^*.
KernelSeries conjugated(const KernelSeries& kernel, const ComplexMatrix& unitary);

/// K(lambda, lambda) as a series in (lambda, conj(lambda)), box (D, D).
BiSeries diagonal_restriction(const KernelSeries& kernel);

/// Inverse of K(lambda, lambda) computed order by order from A_00^{-1}.
BiSeries invert_on_diagonal(const KernelSeries& kernel);

HoloSeries invert_holo(const HoloSeries& phi);

struct ValidationReport {
  double hermitian_residual = 0.0;
  double gram_min_eigenvalue = 0.0;
  double gram_max_eigenvalue = 0.0;
  double constant_term_condition = 0.0;
  bool hermitian = false;
  bool non_negative = false;
  bool constant_term_invertible = false;

  bool passed() const noexcept { return hermitian && non_negative && constant_term_invertible; }
};

ValidationReport validate(const KernelSeries& kernel, const Tolerances& tol = {});

/// Block Gram matrix with block (m, q) equal to A_mq.
ComplexMatrix gram_matrix(const KernelSeries& kernel);

}  // namespace rkcd

#endif  // RKCD_SERIES_HPP
