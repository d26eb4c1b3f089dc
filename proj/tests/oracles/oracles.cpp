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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace oracle {

namespace {

// Pivots below this fraction of the largest input entry count as zero.
constexpr double kPivotTolerance = 1e-8;

int real_rank(std::vector<std::vector<double>> a, double reference) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  double biggest = reference;
  for (const auto& r : a)
    for (double v : r) biggest = std::max(biggest, std::abs(v));
  const double cutoff = kPivotTolerance * biggest;

  int rank = 0;
  for (std::size_t step = 0; step < std::min(rows, cols); ++step) {
    std::size_t pr = step;
    std::size_t pc = step;
    double best = 0.0;
    for (std::size_t i = step; i < rows; ++i)
      for (std::size_t j = step; j < cols; ++j)
        if (std::abs(a[i][j]) > best) {
          best = std::abs(a[i][j]);
          pr = i;
          pc = j;
        }
    if (best <= cutoff) break;
    std::swap(a[step], a[pr]);
    if (pc != step)
      for (auto& r : a) std::swap(r[step], r[pc]);
    for (std::size_t i = step + 1; i < rows; ++i) {
      const double f = a[i][step] / a[step][step];
      if (f == 0.0) continue;
      for (std::size_t j = step; j < cols; ++j) a[i][j] -= f * a[step][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int intertwiner_dimension(const std::vector<Mat>& from, const std::vector<Mat>& to) {
  const std::size_t q = from.empty() ? 0 : static_cast<std::size_t>(from[0].rows());
  const std::size_t p = to.empty() ? 0 : static_cast<std::size_t>(to[0].rows());
  const std::size_t n = p * q;
  // Unknown X(i, l) = x[2 (i q + l)] + i x[2 (i q + l) + 1] (row-major).
  std::vector<std::vector<double>> rows;
  double reference = 0.0;
  auto add_system = [&](const Mat& a, const Mat& b) {
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        // (XA - BX)(i, j) = sum_l X(i, l) a(l, j) - sum_k b(i, k) X(k, j)
        std::vector<C> coef(n, C(0.0));
        for (std::size_t l = 0; l < q; ++l) coef[i * q + l] += a(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(j));
        for (std::size_t k = 0; k < p; ++k) coef[k * q + j] -= b(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
        std::vector<double> real_row(2 * n, 0.0);
        std::vector<double> imag_row(2 * n, 0.0);
        for (std::size_t u = 0; u < n; ++u) {
          // coef * (x + i y) = (cr x - ci y) + i (ci x + cr y)
          real_row[2 * u] = coef[u].real();
          real_row[2 * u + 1] = -coef[u].imag();
          imag_row[2 * u] = coef[u].imag();
          imag_row[2 * u + 1] = coef[u].real();
        }
        rows.push_back(std::move(real_row));
        rows.push_back(std::move(imag_row));
      }
  };
  for (std::size_t k = 0; k < from.size(); ++k) {
    reference = std::max({reference, from[k].cwiseAbs().maxCoeff(), to[k].cwiseAbs().maxCoeff()});
    add_system(from[k], to[k]);
    add_system(from[k].adjoint(), to[k].adjoint());
  }
  const int real_dim = static_cast<int>(2 * n) - real_rank(std::move(rows), reference);
  // The solution set is a complex subspace: real dimension is twice the complex one.
  return real_dim / 2;
}

std::vector<Mat> kernel_family(const rkcd::KernelSeries& k) {
  std::vector<Mat> out;
  for (int m = 0; m <= k.degree(); ++m)
    for (int q = 0; q <= k.degree(); ++q) out.push_back(k.coeff(m, q));
  return out;
}

rkcd::KernelSeries congruence(const rkcd::HoloSeries& psi, const rkcd::KernelSeries& k, const rkcd::HoloSeries& phi) {
  const int d = std::min({psi.degree(), k.degree(), phi.degree()});
  rkcd::KernelSeries out(psi.rows(), d);
  for (int m = 0; m <= d; ++m)
    for (int q = 0; q <= d; ++q) {
      Mat acc = Mat::Zero(psi.rows(), phi.rows());
      for (int a = 0; a <= m; ++a)
        for (int c = 0; c <= q; ++c) acc += psi.coeff(a) * k.coeff(m - a, c) * phi.coeff(q - c).adjoint();
      out.set(m, q, acc);
    }
  return out;
}

rkcd::HoloSeries product(const rkcd::HoloSeries& a, const rkcd::HoloSeries& b) {
  const int d = std::min(a.degree(), b.degree());
  rkcd::HoloSeries out(a.rows(), b.cols(), d);
  for (int m = 0; m <= d; ++m) {
    Mat acc = Mat::Zero(a.rows(), b.cols());
    for (int i = 0; i <= m; ++i) acc += a.coeff(i) * b.coeff(m - i);
    out.set(m, acc);
  }
  return out;
}

double diagonal_value(const rkcd::KernelSeries& k, C lambda) {
  C acc(0.0);
  for (int m = 0; m <= k.degree(); ++m)
    for (int q = 0; q <= k.degree(); ++q)
      acc += k.coeff(m, q)(0, 0) * std::pow(lambda, m) * std::pow(std::conj(lambda), q);
  return acc.real();
}

double fd_curvature(const std::function<double(C)>& h, C lambda, double step) {
  const double center = std::log(h(lambda));
  const double sum = std::log(h(lambda + step)) + std::log(h(lambda - step)) + std::log(h(lambda + C(0.0, step))) +
                     std::log(h(lambda - C(0.0, step)));
  return -0.25 * (sum - 4.0 * center) / (step * step);
}

rkcd::KernelSeries one_plus_mu_szego(int degree) {
  // Coefficient of mu^m conj(lambda)^q in (1 + mu)(1 + conj(lambda)) sum_k (mu conj(lambda))^k
  // counts the ways m = a + k, q = c + k with a, c in {0, 1}.
  rkcd::KernelSeries out(1, degree);
  for (int m = 0; m <= degree; ++m)
    for (int q = 0; q <= degree; ++q) {
      int count = 0;
      for (int a = 0; a <= 1; ++a)
        for (int c = 0; c <= 1; ++c)
          if (m - a >= 0 && m - a == q - c) ++count;
      if (count != 0) out.set(m, q, Mat::Constant(1, 1, static_cast<double>(count)));
    }
  return out;
}

}  // namespace oracle
