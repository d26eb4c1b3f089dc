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

#include "rkcd/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rkcd/errors.hpp"
#include "rkcd/linalg.hpp"

namespace rkcd {

namespace {

void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) throw Error(code, message);
}

void require_shape(const ComplexMatrix& m, int rows, int cols, const char* what) {
  require(m.rows() == rows && m.cols() == cols, ErrorCode::RankMismatch,
          std::string(what) + ": coefficient has shape " + std::to_string(m.rows()) + "x" +
              std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
              std::to_string(cols));
}

ComplexMatrix invert_constant(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0) return m;
  const double cond = condition_number(m);
  require(std::isfinite(cond) && cond < 1e15, ErrorCode::Singular,
          std::string(what) + ": constant term is singular");
  return m.inverse();
}

}  // namespace

// --- KernelSeries ---------------------------------------------------------

KernelSeries::KernelSeries(int rank, int degree) : rank_(rank), degree_(degree) {
  require(rank >= 0 && degree >= 0, ErrorCode::InvalidArgument,
          "kernel rank and degree must be non-negative");
  const auto count = static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 1);
  coeffs_.assign(count, ComplexMatrix::Zero(rank, rank));
}

std::size_t KernelSeries::index(int m, int q) const {
  require(m >= 0 && q >= 0 && m <= degree_ && q <= degree_, ErrorCode::InvalidArgument,
          "kernel coefficient index (" + std::to_string(m) + "," + std::to_string(q) +
              ") outside degree " + std::to_string(degree_));
  return static_cast<std::size_t>(m) * static_cast<std::size_t>(degree_ + 1) +
         static_cast<std::size_t>(q);
}

void KernelSeries::set(int m, int q, const ComplexMatrix& value) {
  require_shape(value, rank_, rank_, "KernelSeries::set");
  coeffs_[index(m, q)] = value;
}

ComplexMatrix KernelSeries::eval(Complex mu, Complex lambda) const {
  ComplexMatrix result = ComplexMatrix::Zero(rank_, rank_);
  const Complex lambda_bar = std::conj(lambda);
  Complex mu_pow = 1.0;
  for (int m = 0; m <= degree_; ++m) {
    Complex lam_pow = 1.0;
    for (int q = 0; q <= degree_; ++q) {
      result += (mu_pow * lam_pow) * coeff(m, q);
      lam_pow *= lambda_bar;
    }
    mu_pow *= mu;
  }
  return result;
}

KernelSeries KernelSeries::truncated(int degree) const {
  const int d = std::min(degree, degree_);
  KernelSeries out(rank_, d);
  for (int m = 0; m <= d; ++m)
    for (int q = 0; q <= d; ++q) out.coeffs_[out.index(m, q)] = coeff(m, q);
  return out;
}

KernelSeries KernelSeries::scaled(double factor) const {
  KernelSeries out = *this;
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

double KernelSeries::max_norm() const {
  double n = 0.0;
  for (const auto& c : coeffs_) n = std::max(n, c.norm());
  return n;
}

// --- HoloSeries -----------------------------------------------------------

HoloSeries::HoloSeries(int rows, int cols, int degree) : rows_(rows), cols_(cols), degree_(degree) {
  require(rows >= 0 && cols >= 0 && degree >= 0, ErrorCode::InvalidArgument,
          "holomorphic series shape and degree must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(degree + 1), ComplexMatrix::Zero(rows, cols));
}

HoloSeries HoloSeries::identity(int n, int degree) {
  return constant(ComplexMatrix::Identity(n, n), degree);
}

HoloSeries HoloSeries::constant(const ComplexMatrix& value, int degree) {
  HoloSeries out(static_cast<int>(value.rows()), static_cast<int>(value.cols()), degree);
  out.coeffs_[0] = value;
  return out;
}

void HoloSeries::set(int m, const ComplexMatrix& value) {
  require(m >= 0 && m <= degree_, ErrorCode::InvalidArgument, "holomorphic coefficient index out of range");
  require_shape(value, rows_, cols_, "HoloSeries::set");
  coeffs_[static_cast<std::size_t>(m)] = value;
}

ComplexMatrix HoloSeries::eval(Complex mu) const {
  // Horner
  ComplexMatrix result = ComplexMatrix::Zero(rows_, cols_);
  for (int m = degree_; m >= 0; --m) result = (result * mu).eval() + coeff(m);
  return result;
}

HoloSeries HoloSeries::truncated(int degree) const {
  const int d = std::min(degree, degree_);
  HoloSeries out(rows_, cols_, d);
  for (int m = 0; m <= d; ++m) out.coeffs_[static_cast<std::size_t>(m)] = coeff(m);
  return out;
}

HoloSeries HoloSeries::derivative() const {
  HoloSeries out(rows_, cols_, std::max(degree_ - 1, 0));
  for (int m = 1; m <= degree_; ++m)
    out.coeffs_[static_cast<std::size_t>(m - 1)] = static_cast<double>(m) * coeff(m);
  return out;
}

HoloSeries HoloSeries::coefficient_adjoint() const {
  HoloSeries out(cols_, rows_, degree_);
  for (int m = 0; m <= degree_; ++m) out.coeffs_[static_cast<std::size_t>(m)] = coeff(m).adjoint();
  return out;
}

double HoloSeries::max_norm() const {
  double n = 0.0;
  for (const auto& c : coeffs_) n = std::max(n, c.norm());
  return n;
}

HoloSeries operator*(const HoloSeries& a, const HoloSeries& b) {
  require(a.cols() == b.rows(), ErrorCode::RankMismatch, "holomorphic product: inner dimensions differ");
  const int d = std::min(a.degree(), b.degree());
  HoloSeries out(a.rows(), b.cols(), d);
  for (int m = 0; m <= d; ++m) {
    ComplexMatrix acc = ComplexMatrix::Zero(a.rows(), b.cols());
    for (int k = 0; k <= m; ++k) acc.noalias() += a.coeff(k) * b.coeff(m - k);
    out.set(m, acc);
  }
  return out;
}

// --- BiSeries -------------------------------------------------------------

Box intersect(Box a, Box b) noexcept {
  Box out{std::min(a.hol, b.hol), std::min(a.antihol, b.antihol)};
  if (out.empty()) return Box{};
  return out;
}

BiSeries::BiSeries(int rows, int cols, Box box) : rows_(rows), cols_(cols), box_(box) {
  require(rows >= 0 && cols >= 0, ErrorCode::InvalidArgument, "series shape must be non-negative");
  if (box_.empty()) {
    box_ = Box{};
    return;
  }
  const auto count = static_cast<std::size_t>(box_.hol + 1) * static_cast<std::size_t>(box_.antihol + 1);
  coeffs_.assign(count, ComplexMatrix::Zero(rows, cols));
}

BiSeries BiSeries::from_holo(const HoloSeries& phi, int antihol) {
  BiSeries out(phi.rows(), phi.cols(), Box{phi.degree(), antihol});
  if (out.empty()) return out;
  for (int p = 0; p <= phi.degree(); ++p) out.set(p, 0, phi.coeff(p));
  return out;
}

BiSeries BiSeries::from_holo_adjoint(const HoloSeries& phi, int hol) {
  BiSeries out(phi.cols(), phi.rows(), Box{hol, phi.degree()});
  if (out.empty()) return out;
  for (int q = 0; q <= phi.degree(); ++q) out.set(0, q, phi.coeff(q).adjoint());
  return out;
}

BiSeries BiSeries::identity(int n, Box box) {
  BiSeries out(n, n, box);
  if (!out.empty()) out.set(0, 0, ComplexMatrix::Identity(n, n));
  return out;
}

std::size_t BiSeries::index(int p, int q) const {
  require(p >= 0 && q >= 0 && p <= box_.hol && q <= box_.antihol, ErrorCode::InvalidArgument,
          "bi-series coefficient (" + std::to_string(p) + "," + std::to_string(q) +
              ") outside validity box");
  return static_cast<std::size_t>(p) * static_cast<std::size_t>(box_.antihol + 1) +
         static_cast<std::size_t>(q);
}

void BiSeries::set(int p, int q, const ComplexMatrix& value) {
  require_shape(value, rows_, cols_, "BiSeries::set");
  coeffs_[index(p, q)] = value;
}

BiSeries BiSeries::restricted(Box box) const {
  const Box b = intersect(box, box_);
  BiSeries out(rows_, cols_, b);
  for (int p = 0; p <= b.hol; ++p)
    for (int q = 0; q <= b.antihol; ++q) out.coeffs_[out.index(p, q)] = coeff(p, q);
  return out;
}

BiSeries BiSeries::d_hol() const {
  BiSeries out(rows_, cols_, Box{box_.hol - 1, box_.antihol});
  for (int p = 0; p <= out.box_.hol; ++p)
    for (int q = 0; q <= out.box_.antihol; ++q)
      out.coeffs_[out.index(p, q)] = static_cast<double>(p + 1) * coeff(p + 1, q);
  return out;
}

BiSeries BiSeries::d_antihol() const {
  BiSeries out(rows_, cols_, Box{box_.hol, box_.antihol - 1});
  for (int p = 0; p <= out.box_.hol; ++p)
    for (int q = 0; q <= out.box_.antihol; ++q)
      out.coeffs_[out.index(p, q)] = static_cast<double>(q + 1) * coeff(p, q + 1);
  return out;
}

BiSeries BiSeries::inverse() const {
  require(rows_ == cols_, ErrorCode::RankMismatch, "inverse of a non-square series");
  BiSeries out(rows_, cols_, box_);
  if (empty()) return out;
  const ComplexMatrix c00_inv = invert_constant(coeff(0, 0), "BiSeries::inverse");
  for (int p = 0; p <= box_.hol; ++p) {
    for (int q = 0; q <= box_.antihol; ++q) {
      if (p == 0 && q == 0) {
        out.coeffs_[0] = c00_inv;
        continue;
      }
      ComplexMatrix acc = ComplexMatrix::Zero(rows_, cols_);
      for (int a = 0; a <= p; ++a)
        for (int b = 0; b <= q; ++b)
          if (a != 0 || b != 0) acc.noalias() += coeff(a, b) * out.coeff(p - a, q - b);
      out.coeffs_[out.index(p, q)] = -c00_inv * acc;
    }
  }
  return out;
}

BiSeries BiSeries::trace() const {
  require(rows_ == cols_, ErrorCode::RankMismatch, "trace of a non-square series");
  BiSeries out(1, 1, box_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i](0, 0) = coeffs_[i].trace();
  return out;
}

ComplexMatrix BiSeries::eval(Complex lambda) const {
  ComplexMatrix result = ComplexMatrix::Zero(rows_, cols_);
  const Complex lambda_bar = std::conj(lambda);
  Complex p_pow = 1.0;
  for (int p = 0; p <= box_.hol; ++p) {
    Complex q_pow = 1.0;
    for (int q = 0; q <= box_.antihol; ++q) {
      result += (p_pow * q_pow) * coeff(p, q);
      q_pow *= lambda_bar;
    }
    p_pow *= lambda;
  }
  return result;
}

double BiSeries::max_norm() const {
  double n = 0.0;
  for (const auto& c : coeffs_) n = std::max(n, c.norm());
  return n;
}

BiSeries& BiSeries::operator+=(const BiSeries& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, ErrorCode::RankMismatch, "bi-series sum: shapes differ");
  *this = restricted(other.box_);
  for (int p = 0; p <= box_.hol; ++p)
    for (int q = 0; q <= box_.antihol; ++q) coeffs_[index(p, q)] += other.coeff(p, q);
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& other) {
  require(rows_ == other.rows_ && cols_ == other.cols_, ErrorCode::RankMismatch,
          "bi-series difference: shapes differ");
  *this = restricted(other.box_);
  for (int p = 0; p <= box_.hol; ++p)
    for (int q = 0; q <= box_.antihol; ++q) coeffs_[index(p, q)] -= other.coeff(p, q);
  return *this;
}

BiSeries& BiSeries::operator*=(Complex factor) {
  for (auto& c : coeffs_) c *= factor;
  return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  require(a.cols() == b.rows(), ErrorCode::RankMismatch, "bi-series product: inner dimensions differ");
  const Box box = intersect(a.box(), b.box());
  BiSeries out(a.rows(), b.cols(), box);
  for (int p = 0; p <= box.hol; ++p) {
    for (int q = 0; q <= box.antihol; ++q) {
      ComplexMatrix acc = ComplexMatrix::Zero(a.rows(), b.cols());
      for (int i = 0; i <= p; ++i)
        for (int j = 0; j <= q; ++j) acc.noalias() += a.coeff(i, j) * b.coeff(p - i, q - j);
      out.set(p, q, acc);
    }
  }
  return out;
}

BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
BiSeries operator*(Complex factor, BiSeries a) { return a *= factor; }

BiSeries commutator(const BiSeries& a, const BiSeries& b) { return a * b - b * a; }

double relative_residual(const BiSeries& a, const BiSeries& b) {
  const Box box = intersect(a.box(), b.box());
  if (box.empty()) return 0.0;
  double diff = 0.0;
  double scale = 1.0;
  for (int p = 0; p <= box.hol; ++p) {
    for (int q = 0; q <= box.antihol; ++q) {
      diff = std::max(diff, (a.coeff(p, q) - b.coeff(p, q)).norm());
      scale = std::max({scale, a.coeff(p, q).norm(), b.coeff(p, q).norm()});
    }
  }
  return diff / scale;
}

double relative_residual(const KernelSeries& a, const KernelSeries& b) {
  require(a.rank() == b.rank(), ErrorCode::RankMismatch, "kernel residual: ranks differ");
  const int d = std::min(a.degree(), b.degree());
  double diff = 0.0;
  double scale = 1.0;
  for (int m = 0; m <= d; ++m) {
    for (int q = 0; q <= d; ++q) {
      diff = std::max(diff, (a.coeff(m, q) - b.coeff(m, q)).norm());
      scale = std::max({scale, a.coeff(m, q).norm(), b.coeff(m, q).norm()});
    }
  }
  return diff / scale;
}

double relative_residual(const HoloSeries& a, const HoloSeries& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorCode::RankMismatch,
          "holomorphic residual: shapes differ");
  const int d = std::min(a.degree(), b.degree());
  double diff = 0.0;
  double scale = 1.0;
  for (int m = 0; m <= d; ++m) {
    diff = std::max(diff, (a.coeff(m) - b.coeff(m)).norm());
    scale = std::max({scale, a.coeff(m).norm(), b.coeff(m).norm()});
  }
  return diff / scale;
}

// --- kernel algebra -------------------------------------------------------

ComplexMatrix eval(const KernelSeries& kernel, Complex mu, Complex lambda) {
  return kernel.eval(mu, lambda);
}

KernelSeries congruence(const HoloSeries& psi, const KernelSeries& kernel, const HoloSeries& phi) {
  require(psi.cols() == kernel.rank() && phi.cols() == kernel.rank() && psi.rows() == phi.rows(),
          ErrorCode::RankMismatch,
          "congruence: gauge shapes " + std::to_string(psi.rows()) + "x" + std::to_string(psi.cols()) +
              " and " + std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
              " do not fit kernel rank " + std::to_string(kernel.rank()));
  const int d = std::min({psi.degree(), kernel.degree(), phi.degree()});
  const int n_out = psi.rows();

  // left(m, c) = sum_{a+b=m} Psi_a A_bc
  std::vector<ComplexMatrix> left(static_cast<std::size_t>((d + 1) * (d + 1)));
  for (int m = 0; m <= d; ++m) {
    for (int c = 0; c <= d; ++c) {
      ComplexMatrix acc = ComplexMatrix::Zero(n_out, kernel.rank());
      for (int a = 0; a <= m; ++a) acc.noalias() += psi.coeff(a) * kernel.coeff(m - a, c);
      left[static_cast<std::size_t>(m * (d + 1) + c)] = std::move(acc);
    }
  }
  KernelSeries out(n_out, d);
  for (int m = 0; m <= d; ++m) {
    for (int q = 0; q <= d; ++q) {
      ComplexMatrix acc = ComplexMatrix::Zero(n_out, n_out);
      for (int c = 0; c <= q; ++c)
        acc.noalias() += left[static_cast<std::size_t>(m * (d + 1) + c)] * phi.coeff(q - c).adjoint();
      out.set(m, q, acc);
    }
  }
  return out;
}

KernelSeries direct_sum(std::span<const KernelSeries> kernels) {
  require(!kernels.empty(), ErrorCode::InvalidArgument, "direct_sum of an empty list");
  int degree = kernels.front().degree();
  int rank = 0;
  for (const auto& k : kernels) {
    degree = std::min(degree, k.degree());
    rank += k.rank();
  }
  KernelSeries out(rank, degree);
  for (int m = 0; m <= degree; ++m) {
    for (int q = 0; q <= degree; ++q) {
      ComplexMatrix block = ComplexMatrix::Zero(rank, rank);
      int offset = 0;
      for (const auto& k : kernels) {
        block.block(offset, offset, k.rank(), k.rank()) = k.coeff(m, q);
        offset += k.rank();
      }
      out.set(m, q, block);
    }
  }
  return out;
}

KernelSeries conjugated(const KernelSeries& kernel, const ComplexMatrix& unitary) {
  require(unitary.rows() == kernel.rank() && unitary.cols() == kernel.rank(), ErrorCode::RankMismatch,
          "conjugation by a matrix of the wrong size");
  KernelSeries out(kernel.rank(), kernel.degree());
  for (int m = 0; m <= kernel.degree(); ++m)
    for (int q = 0; q <= kernel.degree(); ++q)
      out.set(m, q, unitary * kernel.coeff(m, q) * unitary.adjoint());
  return out;
}

BiSeries diagonal_restriction(const KernelSeries& kernel) {
  const int d = kernel.degree();
  BiSeries out(kernel.rank(), kernel.rank(), Box{d, d});
  for (int p = 0; p <= d; ++p)
    for (int q = 0; q <= d; ++q) out.set(p, q, kernel.coeff(p, q));
  return out;
}

BiSeries invert_on_diagonal(const KernelSeries& kernel) {
  return diagonal_restriction(kernel).inverse();
}

HoloSeries invert_holo(const HoloSeries& phi) {
  require(phi.rows() == phi.cols(), ErrorCode::RankMismatch, "invert_holo: series is not square");
  const int n = phi.rows();
  HoloSeries out(n, n, phi.degree());
  const ComplexMatrix c0_inv = invert_constant(phi.coeff(0), "invert_holo");
  out.set(0, c0_inv);
  for (int m = 1; m <= phi.degree(); ++m) {
    ComplexMatrix acc = ComplexMatrix::Zero(n, n);
    for (int k = 1; k <= m; ++k) acc.noalias() += phi.coeff(k) * out.coeff(m - k);
    out.set(m, -c0_inv * acc);
  }
  return out;
}

ComplexMatrix gram_matrix(const KernelSeries& kernel) {
  const int n = kernel.rank();
  const int d = kernel.degree();
  ComplexMatrix g(n * (d + 1), n * (d + 1));
  for (int m = 0; m <= d; ++m)
    for (int q = 0; q <= d; ++q) g.block(m * n, q * n, n, n) = kernel.coeff(m, q);
  return g;
}

ValidationReport validate(const KernelSeries& kernel, const Tolerances& tol) {
  ValidationReport report;
  const int d = kernel.degree();
  double scale = 1.0;
  double herm = 0.0;
  for (int m = 0; m <= d; ++m) {
    for (int q = 0; q <= d; ++q) {
      scale = std::max(scale, kernel.coeff(m, q).norm());
      herm = std::max(herm, (kernel.coeff(m, q) - kernel.coeff(q, m).adjoint()).norm());
    }
  }
  report.hermitian_residual = herm / scale;
  report.hermitian = report.hermitian_residual <= tol.zero;

  if (kernel.rank() == 0) {
    report.non_negative = true;
    report.constant_term_invertible = true;
    report.constant_term_condition = 1.0;
    return report;
  }

  const ComplexMatrix g = gram_matrix(kernel);
  const ComplexMatrix g_sym = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(g_sym, Eigen::EigenvaluesOnly);
  report.gram_min_eigenvalue = eig.eigenvalues().minCoeff();
  report.gram_max_eigenvalue = eig.eigenvalues().maxCoeff();
  report.non_negative =
      report.gram_min_eigenvalue >= -tol.psd * std::max(1.0, report.gram_max_eigenvalue);

  report.constant_term_condition = condition_number(kernel.coeff(0, 0));
  report.constant_term_invertible = std::isfinite(report.constant_term_condition) &&
                                    report.constant_term_condition < 1.0 / tol.zero;
  return report;
}

}  // namespace rkcd
