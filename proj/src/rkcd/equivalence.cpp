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

#include "rkcd/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "rkcd/errors.hpp"
#include "rkcd/linalg.hpp"
#include "rkcd/normalization.hpp"

namespace rkcd {

namespace {

constexpr int kExhaustiveLimit = 6;

Shape shape_of(const Decomposition& d) {
  Shape s;
  for (const Component& c : d.components) s.emplace_back(c.rank, c.multiplicity);
  return s;
}

Shape sorted(Shape s) {
  std::sort(s.begin(), s.end());
  return s;
}

// Table of witnesses W_ij with W R_Sj W^* = R_Ti for shape-compatible pairs.
using WitnessTable = std::vector<std::vector<std::optional<ComplexMatrix>>>;

WitnessTable witness_table(const Decomposition& t, const Decomposition& s, const Tolerances& tol) {
  WitnessTable table(t.components.size(), std::vector<std::optional<ComplexMatrix>>(s.components.size()));
  for (std::size_t i = 0; i < t.components.size(); ++i)
    for (std::size_t j = 0; j < s.components.size(); ++j) {
      const Component& ct = t.components[i];
      const Component& cs = s.components[j];
      if (ct.rank != cs.rank || ct.multiplicity != cs.multiplicity) continue;
      table[i][j] = unitary_witness_irreducible(cs.representative, ct.representative, tol);
    }
  return table;
}

bool assign(const WitnessTable& table, std::size_t i, std::vector<int>& perm, std::vector<bool>& used,
            bool exhaustive) {
  if (i == table.size()) return true;
  for (std::size_t j = 0; j < table[i].size(); ++j) {
    if (used[j] || !table[i][j]) continue;
    used[j] = true;
    perm[i] = static_cast<int>(j);
    if (assign(table, i + 1, perm, used, exhaustive)) return true;
    used[j] = false;
    if (!exhaustive) return false;
  }
  return false;
}

}  // namespace

const char* to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::NotEquivalent: return "not_equivalent";
    case Verdict::Undecided: return "undecided";
    case Verdict::VerificationFailed: return "verification_failed";
  }
  return "unknown";
}

const char* to_string(BlockClass c) noexcept {
  switch (c) {
    case BlockClass::Zero: return "ZERO";
    case BlockClass::Invertible: return "INVERTIBLE";
    case BlockClass::Singular: return "SINGULAR";
  }
  return "unknown";
}

EquivalenceVerdict are_equivalent(const KernelSeries& kernel_t, const KernelSeries& kernel_s, std::uint64_t seed,
                                  const Tolerances& tol) {
  if (kernel_t.rank() != kernel_s.rank())
    throw Error(ErrorCode::RankMismatch, "are_equivalent: ranks " + std::to_string(kernel_t.rank()) + " and " +
                                             std::to_string(kernel_s.rank()) + " differ");
  for (const KernelSeries* k : {&kernel_t, &kernel_s})
    if (!validate(*k, tol).passed()) throw Error(ErrorCode::InvalidArgument, "are_equivalent: invalid kernel");

  EquivalenceVerdict out;
  out.degree = std::min(kernel_t.degree(), kernel_s.degree());
  const KernelSeries kt = kernel_t.truncated(out.degree);
  const KernelSeries ks = kernel_s.truncated(out.degree);

  const NormalizedPair nt = normalize(kt, tol);
  const NormalizedPair ns = normalize(ks, tol);
  const MatrixFamily ft = MatrixFamily::from_kernel(nt.normalized);
  const MatrixFamily fs = MatrixFamily::from_kernel(ns.normalized);

  const Decomposition dt = decompose(ft, seed, tol);
  const Decomposition ds = decompose(fs, seed, tol);
  out.shape_t = shape_of(dt);
  out.shape_s = shape_of(ds);
  if (!dt.verified || !ds.verified) {
    out.verdict = Verdict::VerificationFailed;
    out.reason = "decomposition failed: " + (dt.verified ? ds.failure : dt.failure);
    return out;
  }
  if (sorted(out.shape_t) != sorted(out.shape_s)) {
    out.verdict = Verdict::NotEquivalent;
    out.reason = "decomposition shapes differ";
    return out;
  }

  WitnessTable table;
  try {
    table = witness_table(dt, ds, tol);
  } catch (const Error& e) {
    out.verdict = Verdict::VerificationFailed;
    out.reason = e.what();
    return out;
  }
  const std::size_t t = dt.components.size();
  std::vector<int> perm(t, -1);
  std::vector<bool> used(t, false);
  const bool exhaustive = t <= static_cast<std::size_t>(kExhaustiveLimit);
  if (!assign(table, 0, perm, used, exhaustive)) {
    out.verdict = Verdict::NotEquivalent;
    out.reason = "no unitary matching of irreducible components";
    return out;
  }
  out.permutation = perm;

  const int n = kt.rank();
  ComplexMatrix v = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < t; ++i) {
    const Component& ct = dt.components[i];
    const Component& cs = ds.components[static_cast<std::size_t>(perm[i])];
    const ComplexMatrix& w = *table[i][static_cast<std::size_t>(perm[i])];
    for (int b = 0; b < ct.multiplicity; ++b)
      v += ct.blocks[static_cast<std::size_t>(b)] * w * cs.blocks[static_cast<std::size_t>(b)].adjoint();
  }
  out.unitary = v;
  out.witness = invert_holo(nt.gauge) * HoloSeries::constant(v, out.degree) * ns.gauge;
  out.residual = relative_residual(congruence(out.witness, ks, out.witness), kt);

  if (out.residual <= 10.0 * tol.zero) {
    out.verdict = Verdict::Equivalent;
  } else if (out.residual <= kUndecidedCeiling) {
    out.verdict = Verdict::Undecided;
    out.reason = "congruence residual " + format_residual(out.residual) + " above tolerance";
  } else {
    out.verdict = Verdict::VerificationFailed;
    out.reason = "congruence residual " + format_residual(out.residual) + " for a matched decomposition";
    out.witness = HoloSeries();
  }
  return out;
}

Kk1Report kk1_check(const KernelSeries& kernel_t, const KernelSeries& kernel_s, const HoloSeries& psi,
                    const Tolerances& tol) {
  const int n = kernel_t.rank();
  if (kernel_s.rank() != n || psi.rows() != n || psi.cols() != n)
    throw Error(ErrorCode::RankMismatch, "kk1_check: kernels and Psi must share one rank");
  const int d = std::min(kernel_t.degree(), kernel_s.degree());
  const BiSeries lift = BiSeries::from_holo(invert_holo(psi), d);

  Kk1Report out;
  out.m = invert_on_diagonal(kernel_t) * lift * diagonal_restriction(kernel_s);
  const Box box = out.m.box();
  const double scale = std::max(1.0, out.m.max_norm());
  double worst = 0.0;
  for (int p = 1; p <= box.hol; ++p)
    for (int q = 0; q <= box.antihol; ++q) {
      const double v = out.m.coeff(p, q).norm();
      if (v > worst) {
        worst = v;
        out.leading_p = p;
        out.leading_q = q;
      }
    }
  out.residual = worst / scale;
  out.holds = out.residual <= tol.zero;
  return out;
}

IntertwinerReport intertwiner_structure(const HoloSeries& phi, std::span<const int> partition_t,
                                        std::span<const int> partition_s, const Tolerances& tol) {
  auto check_partition = [](std::span<const int> part, int total, const char* which) {
    int sum = 0;
    for (int p : part) {
      if (p < 1) throw Error(ErrorCode::InvalidArgument, std::string(which) + " partition has a non-positive part");
      sum += p;
    }
    if (sum != total)
      throw Error(ErrorCode::RankMismatch, std::string(which) + " partition sums to " + std::to_string(sum) +
                                               ", expected " + std::to_string(total));
  };
  check_partition(partition_t, phi.rows(), "row");
  check_partition(partition_s, phi.cols(), "column");

  IntertwinerReport out;
  out.partition_t.assign(partition_t.begin(), partition_t.end());
  out.partition_s.assign(partition_s.begin(), partition_s.end());
  out.psi = invert_holo(phi);
  out.inverse_residual = relative_residual(phi * out.psi, HoloSeries::identity(phi.rows(), phi.degree()));

  const int d = phi.degree();
  auto offsets = [](std::span<const int> part) {
    std::vector<int> off(part.size() + 1, 0);
    std::partial_sum(part.begin(), part.end(), off.begin() + 1);
    return off;
  };
  const std::vector<int> off_t = offsets(partition_t);
  const std::vector<int> off_s = offsets(partition_s);
  auto slice = [d](const HoloSeries& h, int r0, int nr, int c0, int nc) {
    HoloSeries out(nr, nc, d);
    for (int m = 0; m <= d; ++m) out.set(m, h.coeff(m).block(r0, c0, nr, nc));
    return out;
  };
  // Residual of P against c I over all coefficients, relative to max(1, |c|).
  auto scalar_fit = [](const HoloSeries& p, double& c) {
    const int k = p.rows();
    const Complex tr = p.coeff(0).trace() / static_cast<double>(k);
    c = tr.real();
    double worst = std::abs(tr.imag());
    for (int m = 0; m <= p.degree(); ++m) {
      ComplexMatrix r = p.coeff(m);
      if (m == 0) r -= tr * ComplexMatrix::Identity(k, k);
      worst = std::max(worst, r.norm());
    }
    return worst / std::max(1.0, std::abs(c));
  };

  const std::size_t bt = partition_t.size();
  const std::size_t bs = partition_s.size();
  const double scale = std::max(1.0, phi.max_norm());
  out.c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(bs), static_cast<Eigen::Index>(bt));
  out.classes.assign(bt, std::vector<BlockClass>(bs, BlockClass::Zero));
  for (std::size_t j = 0; j < bt; ++j)
    for (std::size_t i = 0; i < bs; ++i) {
      const HoloSeries phi_ji = slice(phi, off_t[j], partition_t[j], off_s[i], partition_s[i]);
      const HoloSeries psi_ij = slice(out.psi, off_s[i], partition_s[i], off_t[j], partition_t[j]);
      double c1 = 0.0;
      double c2 = 0.0;
      const double r1 = scalar_fit(psi_ij * phi_ji, c1);
      const double r2 = scalar_fit(phi_ji * psi_ij, c2);
      out.scalar_residual = std::max({out.scalar_residual, r1, r2, std::abs(c1 - c2)});
      out.c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = c1;

      BlockClass cls = BlockClass::Zero;
      if (phi_ji.max_norm() > tol.zero * scale) {
        cls = BlockClass::Singular;
        if (phi_ji.rows() == phi_ji.cols()) {
          Eigen::JacobiSVD<ComplexMatrix> svd(phi_ji.coeff(0));
          const auto& sv = svd.singularValues();
          if (sv(sv.size() - 1) > tol.zero * scale) cls = BlockClass::Invertible;
        }
      }
      out.classes[j][i] = cls;
    }
  for (Eigen::Index i = 0; i < out.c.rows(); ++i)
    out.row_sum_residual = std::max(out.row_sum_residual, std::abs(out.c.row(i).sum() - 1.0));
  for (Eigen::Index j = 0; j < out.c.cols(); ++j)
    out.column_sum_residual = std::max(out.column_sum_residual, std::abs(out.c.col(j).sum() - 1.0));

  bool pattern = bt == bs;
  for (std::size_t j = 0; pattern && j < bt; ++j) {
    int nonzero = 0;
    for (std::size_t i = 0; i < bs; ++i) {
      if (out.classes[j][i] == BlockClass::Singular) pattern = false;
      if (out.classes[j][i] != BlockClass::Zero) ++nonzero;
    }
    if (nonzero != 1) pattern = false;
  }
  for (std::size_t i = 0; pattern && i < bs; ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < bt; ++j)
      if (out.classes[j][i] != BlockClass::Zero) ++nonzero;
    if (nonzero != 1) pattern = false;
  }
  out.permutation_pattern = pattern;

  const double limit = 10.0 * tol.zero;
  bool classified = true;
  for (const auto& row : out.classes)
    for (BlockClass c : row)
      if (c == BlockClass::Singular) classified = false;
  out.passed = classified && out.inverse_residual <= limit && out.scalar_residual <= limit &&
               out.row_sum_residual <= limit && out.column_sum_residual <= limit && (out.c.array() >= -limit).all();
  return out;
}

}  // namespace rkcd
