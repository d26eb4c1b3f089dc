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

#ifndef RKCD_GEOMETRY_HPP
#define RKCD_GEOMETRY_HPP

#include <map>
#include <utility>
#include <vector>

#include "rkcd/series.hpp"

namespace rkcd {

/// Metric h(lambda) of the Hermitian holomorphic data attached to a kernel.
/// Coefficient (p, q) multiplies lambda^p conj(lambda)^q.
class MetricSeries {
 public:
  /// Checks Hermitian symmetry and a positive definite constant term.
  explicit MetricSeries(BiSeries h, const Tolerances& tol = {});

  const BiSeries& series() const noexcept { return h_; }
  int rank() const noexcept { return h_.rows(); }

 private:
  BiSeries h_;
};

/// Theta = h^{-1} dh/dlambda.
struct ConnectionSeries {
  BiSeries theta;
};

/// Curvature and its covariant partial derivatives, keyed by (i, j) = number
/// of lambda and conj(lambda) derivatives.
class CurvatureTable {
 public:
  CurvatureTable(int order, std::map<std::pair<int, int>, BiSeries> entries)
      : order_(order), entries_(std::move(entries)) {}

  int order() const noexcept { return order_; }
  const BiSeries& at(int i, int j) const;
  const std::map<std::pair<int, int>, BiSeries>& entries() const noexcept { return entries_; }

 private:
  int order_;
  std::map<std::pair<int, int>, BiSeries> entries_;
};

enum class MetricConvention { Direct, Omega };

/// h(lambda) := K(lambda, lambda); coefficient (p, q) = A_pq.
MetricSeries metric_direct(const KernelSeries& kernel, const Tolerances& tol = {});

/// h(lambda) := K(conj(lambda), conj(lambda)); coefficient (p, q) = A_qp.
MetricSeries metric_omega(const KernelSeries& kernel, const Tolerances& tol = {});

MetricSeries metric(const KernelSeries& kernel, MetricConvention convention, const Tolerances& tol = {});

/// Phi(lambda)^* h Phi(lambda) for holomorphic Phi.
MetricSeries gauge_transform(const MetricSeries& h, const HoloSeries& phi, const Tolerances& tol = {});

ConnectionSeries connection(const MetricSeries& h);

/// -d/dconj(lambda) (h^{-1} dh/dlambda); box shrinks by one in each direction.
BiSeries curvature(const MetricSeries& h);

/// Entries (i, j) with i + j <= order. Entry (i, 0) follows
/// K_{i+1,0} = dK_{i,0} + [Theta, K_{i,0}], entry (i, j) applies j
/// conj(lambda)-derivatives to (i, 0).
CurvatureTable covariant_table(const MetricSeries& h, int order);

/// Largest relative coefficient residual of
/// Theta_T - (Phi^{-1} Theta_S Phi + Phi^{-1} Phi') on the common box.
double gauge_law_check(const ConnectionSeries& theta_t, const ConnectionSeries& theta_s, const HoloSeries& phi);

struct IntertwiningReport {
  double hypothesis_residual = 0.0;
  bool hypothesis_holds = false;
  /// Max over i, j >= 1, i + j <= order of the intertwining residual.
  double residual = 0.0;
  std::map<std::pair<int, int>, double> entry_residuals;
};

/// Checks that the covariant derivatives of the curvature intertwine,
/// Phi~ K_{S,ij} = K_{T,ij} Phi~ with Phi~(lambda) = sum Phi_m^* lambda^m,
/// assuming K_S(mu, lambda) = Psi(mu) K_T(mu, lambda) Phi(lambda)^*. Both tables
/// come from the omega-convention metric. A violated hypothesis is reported
/// in the result rather than thrown.
IntertwiningReport covariant_intertwining_check(const KernelSeries& kernel_t, const KernelSeries& kernel_s,
                                                const HoloSeries& psi, const HoloSeries& phi, int order,
                                                const Tolerances& tol = {});

/// Coefficients e_1 (trace), ..., e_n (determinant) of the characteristic
/// polynomial det(x - K) = sum_k (-1)^k e_k x^{n-k} of the curvature, each as a
/// scalar series on the curvature's box.
std::vector<BiSeries> curvature_eigen_invariants(const MetricSeries& h);

}  // namespace rkcd

#endif  // RKCD_GEOMETRY_HPP
