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

#include "rkcd/commutant.hpp"

#include <algorithm>
#include <cmath>

#include "rkcd/errors.hpp"
#include "rkcd/linalg.hpp"

namespace rkcd {

namespace {

constexpr int kMaxSplitAttempts = 8;
constexpr double kDegenerateSpread = 1e-12;

struct Splitter {
  const MatrixFamily& family;
  const Tolerances& tol;
  Rng rng;
  std::vector<ComplexMatrix> blocks;
  std::string failure;

  // Random Hermitian element built from both Hermitian parts of each basis
  // element, so skew-Hermitian commutant directions are sampled as well.
  ComplexMatrix random_hermitian(const CommutantBasis& basis) {
    std::normal_distribution<double> normal(0.0, 1.0);
    const Eigen::Index n = basis.elements.front().rows();
    ComplexMatrix h = ComplexMatrix::Zero(n, n);
    const Complex half_i(0.0, 0.5);
    for (const ComplexMatrix& x : basis.elements) {
      const double r = normal(rng);
      const double s = normal(rng);
      h += r * 0.5 * (x + x.adjoint());
      h += s * (-half_i) * (x - x.adjoint());
    }
    return 0.5 * (h + h.adjoint());
  }

  bool split(const ComplexMatrix& v) {
    const CommutantBasis basis = commutant_basis(family.restricted(v), tol);
    if (basis.dimension() <= 1) {
      blocks.push_back(v);
      return true;
    }
    for (int attempt = 0; attempt < kMaxSplitAttempts; ++attempt) {
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(random_hermitian(basis));
      const Eigen::VectorXd& ev = eig.eigenvalues();
      const Eigen::Index k = ev.size();
      const double diameter = ev(k - 1) - ev(0);
      const double scale = std::max(std::abs(ev(0)), std::abs(ev(k - 1)));
      if (!(diameter > kDegenerateSpread * scale)) continue;

      // Descending order; a gap above tol.gap * diameter starts a new cluster.
      std::vector<std::vector<Eigen::Index>> clusters{{k - 1}};
      for (Eigen::Index i = k - 2; i >= 0; --i) {
        if (ev(i + 1) - ev(i) > tol.gap * diameter) clusters.emplace_back();
        clusters.back().push_back(i);
      }
      if (clusters.size() < 2) continue;

      for (const auto& cluster : clusters) {
        ComplexMatrix q(v.cols(), static_cast<Eigen::Index>(cluster.size()));
        for (std::size_t c = 0; c < cluster.size(); ++c)
          q.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(cluster[c]);
        if (!split(v * q)) return false;
      }
      return true;
    }
    failure = "no spectral split of a block with commutant dimension " + std::to_string(basis.dimension()) +
              " after " + std::to_string(kMaxSplitAttempts) + " draws";
    return false;
  }
};

double block_residual(const MatrixFamily& family, const Decomposition& d) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> ranges;
  Eigen::Index start = 0;
  for (const Component& c : d.components)
    for (int b = 0; b < c.multiplicity; ++b) {
      ranges.emplace_back(start, c.rank);
      start += c.rank;
    }
  // Relative to the largest member: roundoff-level members would otherwise
  // report O(1) residuals.
  double scale = 0.0;
  for (const ComplexMatrix& a : family.members()) scale = std::max(scale, a.norm());
  if (scale == 0.0) return 0.0;
  double worst = 0.0;
  for (const ComplexMatrix& a : family.members()) {
    ComplexMatrix b = d.unitary.adjoint() * a * d.unitary;
    for (const auto& [s, len] : ranges) b.block(s, s, len, len).setZero();
    worst = std::max(worst, b.norm() / scale);
  }
  return worst;
}

}  // namespace

Decomposition decompose(const MatrixFamily& family, std::uint64_t seed, const Tolerances& tol) {
  Decomposition out;
  const int n = family.rank();
  out.unitary = ComplexMatrix::Identity(n, n);
  if (n == 0) {
    out.verified = true;
    return out;
  }
  out.commutant_dim = commutant_basis(family, tol).dimension();

  Splitter splitter{family, tol, Rng(seed), {}, {}};
  if (!splitter.split(ComplexMatrix::Identity(n, n))) {
    out.failure = splitter.failure;
    return out;
  }

  // Group blocks into components; each copy is rotated so that its restricted
  // family coincides with the representative's.
  try {
    for (const ComplexMatrix& v : splitter.blocks) {
      const MatrixFamily restricted = family.restricted(v);
      bool placed = false;
      for (Component& c : out.components) {
        if (c.rank != v.cols()) continue;
        const auto w = unitary_witness_irreducible(c.representative, restricted, tol);
        if (!w) continue;
        c.blocks.push_back(v * *w);
        ++c.multiplicity;
        placed = true;
        break;
      }
      if (!placed) {
        Component c;
        c.rank = static_cast<int>(v.cols());
        c.multiplicity = 1;
        c.blocks.push_back(v);
        c.representative = restricted;
        out.components.push_back(std::move(c));
      }
    }
  } catch (const Error& e) {
    out.failure = e.what();
    return out;
  }
  out.t = static_cast<int>(out.components.size());

  Eigen::Index col = 0;
  for (const Component& c : out.components)
    for (const ComplexMatrix& b : c.blocks) {
      out.unitary.middleCols(col, b.cols()) = b;
      col += b.cols();
    }

  std::vector<int> mult;
  for (const Component& c : out.components) mult.push_back(c.multiplicity);
  const int expected = commutant_dimension_report(mult);
  const double defect = unitarity_defect(out.unitary);
  out.residual = std::max(block_residual(family, out), defect);

  if (expected != out.commutant_dim) {
    out.failure = "commutant dimension " + std::to_string(out.commutant_dim) +
                  " differs from the sum of squared multiplicities " + std::to_string(expected);
  } else if (out.residual > 10.0 * tol.zero) {
    out.failure = "block-diagonal residual " + format_residual(out.residual) + " exceeds tolerance";
  } else {
    out.verified = true;
  }
  return out;
}

int commutant_dimension_report(std::span<const int> multiplicities) {
  int total = 0;
  for (int m : multiplicities) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "multiplicities must be at least 1");
    total += m * m;
  }
  return total;
}

}  // namespace rkcd
