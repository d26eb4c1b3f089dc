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

#include "rkcd/geometry.hpp"

#include <algorithm>
#include <string>

#include "rkcd/errors.hpp"

namespace rkcd {

MetricSeries::MetricSeries(BiSeries h, const Tolerances& tol) : h_(std::move(h)) {
  if (h_.rows() != h_.cols()) throw Error(ErrorCode::RankMismatch, "metric must be square");
  if (h_.empty()) throw Error(ErrorCode::EmptyBox, "metric has an empty validity box");
  const Box box = h_.box();
  const int common = std::min(box.hol, box.antihol);
  double scale = 1.0;
  double herm = 0.0;
  for (int p = 0; p <= common; ++p)
    for (int q = 0; q <= common; ++q) {
      scale = std::max(scale, h_.coeff(p, q).norm());
      herm = std::max(herm, (h_.coeff(p, q) - h_.coeff(q, p).adjoint()).norm());
    }
  if (herm > tol.zero * scale)
    throw Error(ErrorCode::InvalidArgument,
                "metric is not Hermitian symmetric (residual " + format_residual(herm / scale) + ")");
  if (rank() == 0) return;
  const ComplexMatrix& h00 = h_.coeff(0, 0);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (h00 + h00.adjoint()), Eigen::EigenvaluesOnly);
  const double lo = eig.eigenvalues().minCoeff();
  const double hi = eig.eigenvalues().maxCoeff();
  if (!(lo > tol.psd * std::max(1.0, hi)))
    throw Error(ErrorCode::NotPositiveDefinite, "metric constant term is not positive definite");
}

const BiSeries& CurvatureTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  if (it == entries_.end())
    throw Error(ErrorCode::InvalidArgument,
                "curvature table has no entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  return it->second;
}

MetricSeries metric_direct(const KernelSeries& kernel, const Tolerances& tol) {
  return MetricSeries(diagonal_restriction(kernel), tol);
}

MetricSeries metric_omega(const KernelSeries& kernel, const Tolerances& tol) {
  const int d = kernel.degree();
  BiSeries h(kernel.rank(), kernel.rank(), Box{d, d});
  for (int p = 0; p <= d; ++p)
    for (int q = 0; q <= d; ++q) h.set(p, q, kernel.coeff(q, p));
  return MetricSeries(std::move(h), tol);
}

MetricSeries metric(const KernelSeries& kernel, MetricConvention convention, const Tolerances& tol) {
  return convention == MetricConvention::Direct ? metric_direct(kernel, tol) : metric_omega(kernel, tol);
}

MetricSeries gauge_transform(const MetricSeries& h, const HoloSeries& phi, const Tolerances& tol) {
  const Box box = h.series().box();
  return MetricSeries(
      BiSeries::from_holo_adjoint(phi, box.hol) * h.series() * BiSeries::from_holo(phi, box.antihol), tol);
}

ConnectionSeries connection(const MetricSeries& h) {
  return {h.series().inverse() * h.series().d_hol()};
}

BiSeries curvature(const MetricSeries& h) {
  BiSeries k = connection(h).theta.d_antihol();
  k *= -1.0;
  return k;
}

CurvatureTable covariant_table(const MetricSeries& h, int order) {
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "covariant table order must be non-negative");
  const BiSeries theta = connection(h).theta;
  std::map<std::pair<int, int>, BiSeries> entries;

  auto check = [](const BiSeries& s, int i, int j) {
    if (s.empty())
      throw Error(ErrorCode::EmptyBox, "covariant derivative (" + std::to_string(i) + "," + std::to_string(j) +
                                           ") has an empty validity box; raise the degree");
  };

  BiSeries column_head = curvature(h);
  for (int i = 0; i <= order; ++i) {
    if (i > 0) column_head = column_head.d_hol() + commutator(theta, column_head);
    check(column_head, i, 0);
    BiSeries entry = column_head;
    entries.emplace(std::make_pair(i, 0), entry);
    for (int j = 1; i + j <= order; ++j) {
      entry = entry.d_antihol();
      check(entry, i, j);
      entries.emplace(std::make_pair(i, j), entry);
    }
  }
  return CurvatureTable(order, std::move(entries));
}

double gauge_law_check(const ConnectionSeries& theta_t, const ConnectionSeries& theta_s, const HoloSeries& phi) {
  const BiSeries& ts = theta_s.theta;
  if (theta_t.theta.rows() != ts.rows() || phi.rows() != ts.rows() || phi.cols() != ts.rows())
    throw Error(ErrorCode::RankMismatch, "gauge_law_check: ranks differ");
  const int antihol = std::max(ts.box().antihol, theta_t.theta.box().antihol);
  const BiSeries phi_l = BiSeries::from_holo(phi, antihol);
  const BiSeries phi_inv = BiSeries::from_holo(invert_holo(phi), antihol);
  const BiSeries phi_prime = BiSeries::from_holo(phi.derivative(), antihol);
  const BiSeries rhs = phi_inv * ts * phi_l + phi_inv * phi_prime;
  return relative_residual(theta_t.theta, rhs);
}

IntertwiningReport covariant_intertwining_check(const KernelSeries& kernel_t, const KernelSeries& kernel_s,
                                                const HoloSeries& psi, const HoloSeries& phi, int order,
                                                const Tolerances& tol) {
  if (kernel_t.rank() != kernel_s.rank())
    throw Error(ErrorCode::RankMismatch, "covariant intertwining: kernel ranks differ");
  IntertwiningReport report;
  report.hypothesis_residual = relative_residual(congruence(psi, kernel_t, phi), kernel_s);
  report.hypothesis_holds = report.hypothesis_residual <= 10.0 * tol.zero;

  const CurvatureTable table_t = covariant_table(metric_omega(kernel_t, tol), order);
  const CurvatureTable table_s = covariant_table(metric_omega(kernel_s, tol), order);
  const HoloSeries phi_tilde = phi.coefficient_adjoint();

  for (const auto& [key, k_s] : table_s.entries()) {
    const auto [i, j] = key;
    if (i < 1 || j < 1) continue;
    const BiSeries& k_t = table_t.at(i, j);
    const int antihol = std::max(k_s.box().antihol, k_t.box().antihol);
    const BiSeries lift = BiSeries::from_holo(phi_tilde, antihol);
    const double r = relative_residual(lift * k_s, k_t * lift);
    report.entry_residuals[key] = r;
    report.residual = std::max(report.residual, r);
  }
  return report;
}

std::vector<BiSeries> curvature_eigen_invariants(const MetricSeries& h) {
  const BiSeries k = curvature(h);
  const int n = h.rank();
  const Box box = k.box();

  // Newton's identities on power sums p_i = tr(K^i).
  std::vector<BiSeries> power_sums;
  BiSeries power = BiSeries::identity(n, box);
  for (int i = 1; i <= n; ++i) {
    power = power * k;
    power_sums.push_back(power.trace());
  }
  std::vector<BiSeries> e{BiSeries::identity(1, box)};
  for (int i = 1; i <= n; ++i) {
    BiSeries acc(1, 1, box);
    for (int j = 1; j <= i; ++j) {
      BiSeries term = e[static_cast<std::size_t>(i - j)] * power_sums[static_cast<std::size_t>(j - 1)];
      if (j % 2 == 0) term *= -1.0;
      acc += term;
    }
    acc *= 1.0 / i;
    e.push_back(std::move(acc));
  }
  e.erase(e.begin());
  return e;
}

}  // namespace rkcd
