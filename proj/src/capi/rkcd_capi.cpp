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

#include "rkcd/rkcd.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "rkcd/errors.hpp"
#include "rkcd/json_io.hpp"
#include "rkcd/normalization.hpp"

struct rkcd_kernel {
  rkcd::KernelSeries value;
};

struct rkcd_holo {
  rkcd::HoloSeries value;
};

namespace {

thread_local std::string last_error;

rkcd_status map_code(rkcd::ErrorCode code) {
  using rkcd::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return RKCD_INVALID_ARGUMENT;
    case ErrorCode::Parse: return RKCD_PARSE_ERROR;
    case ErrorCode::RankMismatch: return RKCD_RANK_MISMATCH;
    case ErrorCode::Singular: return RKCD_SINGULAR;
    case ErrorCode::NotPositiveDefinite: return RKCD_NOT_POSITIVE_DEFINITE;
    case ErrorCode::NotNormalized: return RKCD_NOT_NORMALIZED;
    case ErrorCode::EmptyBox: return RKCD_EMPTY_BOX;
    case ErrorCode::HypothesisViolated: return RKCD_HYPOTHESIS_VIOLATED;
    case ErrorCode::Inconsistent: return RKCD_INCONSISTENT;
    case ErrorCode::Verification: return RKCD_VERIFICATION_FAILED;
  }
  return RKCD_INTERNAL;
}

rkcd_status fail(rkcd_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
rkcd_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const rkcd::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(RKCD_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RKCD_INTERNAL, e.what());
  }
}

rkcd::Tolerances tolerances(const rkcd_tolerances* t) {
  rkcd::Tolerances out;
  if (t == nullptr) return out;
  if (!(t->tau_zero > 0.0) || !(t->tau_psd > 0.0) || !(t->tau_rank > 0.0) || !(t->delta_gap > 0.0))
    throw rkcd::Error(rkcd::ErrorCode::InvalidArgument, "tolerances must be positive");
  out.zero = t->tau_zero;
  out.psd = t->tau_psd;
  out.rank = t->tau_rank;
  out.gap = t->delta_gap;
  return out;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const rkcd::Json& j) {
  if (out != nullptr) *out = copy_string(j.dump(2));
}

#define RKCD_REQUIRE(cond, what) \
  if (!(cond)) return fail(RKCD_INVALID_ARGUMENT, what)

}  // namespace

extern "C" {

void rkcd_default_tolerances(rkcd_tolerances* out) {
  if (out == nullptr) return;
  const rkcd::Tolerances t;
  *out = {t.zero, t.psd, t.rank, t.gap};
}

const char* rkcd_last_error(void) { return last_error.c_str(); }

const char* rkcd_status_string(rkcd_status status) {
  switch (status) {
    case RKCD_OK: return "ok";
    case RKCD_INVALID_ARGUMENT: return "invalid argument";
    case RKCD_PARSE_ERROR: return "parse error";
    case RKCD_RANK_MISMATCH: return "rank mismatch";
    case RKCD_SINGULAR: return "singular";
    case RKCD_NOT_POSITIVE_DEFINITE: return "not positive definite";
    case RKCD_NOT_NORMALIZED: return "not normalized";
    case RKCD_EMPTY_BOX: return "empty validity box";
    case RKCD_HYPOTHESIS_VIOLATED: return "hypothesis violated";
    case RKCD_INCONSISTENT: return "inconsistent";
    case RKCD_VERIFICATION_FAILED: return "verification failed";
    case RKCD_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rkcd_string_free(char* s) { std::free(s); }

rkcd_status rkcd_kernel_from_json(const char* json, rkcd_kernel** out) {
  RKCD_REQUIRE(json != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new rkcd_kernel{rkcd::kernel_from_json(rkcd::parse_json(json))};
    return RKCD_OK;
  });
}

rkcd_status rkcd_kernel_to_json(const rkcd_kernel* k, char** out) {
  RKCD_REQUIRE(k != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    emit(out, rkcd::kernel_to_json(k->value));
    return RKCD_OK;
  });
}

void rkcd_kernel_free(rkcd_kernel* k) { delete k; }

int rkcd_kernel_rank(const rkcd_kernel* k) { return k == nullptr ? -1 : k->value.rank(); }

int rkcd_kernel_degree(const rkcd_kernel* k) { return k == nullptr ? -1 : k->value.degree(); }

rkcd_status rkcd_kernel_truncate(const rkcd_kernel* k, int degree, rkcd_kernel** out) {
  RKCD_REQUIRE(k != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new rkcd_kernel{k->value.truncated(degree)};
    return RKCD_OK;
  });
}

rkcd_status rkcd_kernel_eval(const rkcd_kernel* k, double mu_re, double mu_im, double lambda_re, double lambda_im,
                             double radius, double* out) {
  RKCD_REQUIRE(k != nullptr && out != nullptr, "null argument");
  const rkcd::Complex mu(mu_re, mu_im);
  const rkcd::Complex lambda(lambda_re, lambda_im);
  if (std::abs(mu) > radius || std::abs(lambda) > radius)
    return fail(RKCD_INVALID_ARGUMENT, "evaluation point outside radius " + rkcd::format_residual(radius));
  return guarded([&] {
    const rkcd::ComplexMatrix v = rkcd::eval(k->value, mu, lambda);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < v.rows(); ++i)
      for (Eigen::Index j = 0; j < v.cols(); ++j) {
        out[idx++] = v(i, j).real();
        out[idx++] = v(i, j).imag();
      }
    return RKCD_OK;
  });
}

rkcd_status rkcd_congruence(const rkcd_holo* psi, const rkcd_kernel* k, const rkcd_holo* phi, rkcd_kernel** out) {
  RKCD_REQUIRE(psi != nullptr && k != nullptr && phi != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new rkcd_kernel{rkcd::congruence(psi->value, k->value, phi->value)};
    return RKCD_OK;
  });
}

rkcd_status rkcd_holo_from_json(const char* json, rkcd_holo** out) {
  RKCD_REQUIRE(json != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new rkcd_holo{rkcd::holo_from_json(rkcd::parse_json(json))};
    return RKCD_OK;
  });
}

rkcd_status rkcd_holo_to_json(const rkcd_holo* h, char** out) {
  RKCD_REQUIRE(h != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    emit(out, rkcd::holo_to_json(h->value));
    return RKCD_OK;
  });
}

void rkcd_holo_free(rkcd_holo* h) { delete h; }

rkcd_status rkcd_holo_invert(const rkcd_holo* h, rkcd_holo** out) {
  RKCD_REQUIRE(h != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new rkcd_holo{rkcd::invert_holo(h->value)};
    return RKCD_OK;
  });
}

rkcd_status rkcd_validate(const rkcd_kernel* k, const rkcd_tolerances* tol, int* passed, char** report) {
  RKCD_REQUIRE(k != nullptr, "null kernel");
  return guarded([&] {
    const rkcd::ValidationReport r = rkcd::validate(k->value, tolerances(tol));
    if (passed != nullptr) *passed = r.passed() ? 1 : 0;
    emit(report, rkcd::validation_to_json(r));
    return RKCD_OK;
  });
}

rkcd_status rkcd_curvature(const rkcd_kernel* k, int order, rkcd_convention convention, const rkcd_tolerances* tol,
                           char** out) {
  RKCD_REQUIRE(k != nullptr && out != nullptr, "null argument");
  RKCD_REQUIRE(convention == RKCD_METRIC_DIRECT || convention == RKCD_METRIC_OMEGA, "unknown metric convention");
  return guarded([&] {
    const rkcd::Tolerances t = tolerances(tol);
    const rkcd::MetricSeries h = rkcd::metric(
        k->value, convention == RKCD_METRIC_DIRECT ? rkcd::MetricConvention::Direct : rkcd::MetricConvention::Omega,
        t);
    const rkcd::CurvatureTable table = rkcd::covariant_table(h, order);
    rkcd::Json entries = rkcd::Json::array();
    for (const auto& [key, s] : table.entries()) {
      rkcd::Json e = rkcd::bi_series_to_json(s);
      e["entry"] = {key.first, key.second};
      entries.push_back(std::move(e));
    }
    rkcd::Json invariants = rkcd::Json::array();
    for (const rkcd::BiSeries& e : rkcd::curvature_eigen_invariants(h)) {
      const rkcd::Complex v = e.coeff(0, 0)(0, 0);
      invariants.push_back({v.real(), v.imag()});
    }
    const rkcd::Json j = {{"convention", convention == RKCD_METRIC_DIRECT ? "direct" : "omega"},
                          {"degree", k->value.degree()},
                          {"order", order},
                          {"curvature_at_origin", rkcd::matrix_to_json(table.at(0, 0).coeff(0, 0))},
                          {"invariants_at_origin", invariants},
                          {"table", entries}};
    emit(out, j);
    return RKCD_OK;
  });
}

rkcd_status rkcd_normalize(const rkcd_kernel* k, const rkcd_tolerances* tol, rkcd_kernel** normalized,
                           rkcd_holo** gauge) {
  RKCD_REQUIRE(k != nullptr && normalized != nullptr, "null argument");
  return guarded([&] {
    rkcd::NormalizedPair p = rkcd::normalize(k->value, tolerances(tol));
    *normalized = new rkcd_kernel{std::move(p.normalized)};
    if (gauge != nullptr) *gauge = new rkcd_holo{std::move(p.gauge)};
    return RKCD_OK;
  });
}

rkcd_status rkcd_decompose(const rkcd_kernel* k, uint64_t seed, const rkcd_tolerances* tol, char** out) {
  RKCD_REQUIRE(k != nullptr, "null kernel");
  return guarded([&] {
    const rkcd::Tolerances t = tolerances(tol);
    const rkcd::NormalizedPair p = rkcd::normalize(k->value, t);
    const rkcd::Decomposition d = rkcd::decompose(rkcd::MatrixFamily::from_kernel(p.normalized), seed, t);
    emit(out, rkcd::decomposition_to_json(d));
    if (!d.verified) return fail(RKCD_VERIFICATION_FAILED, d.failure);
    return RKCD_OK;
  });
}

rkcd_status rkcd_equivalent(const rkcd_kernel* a, const rkcd_kernel* b, uint64_t seed, const rkcd_tolerances* tol,
                            rkcd_verdict* verdict, rkcd_holo** witness, char** out) {
  RKCD_REQUIRE(a != nullptr && b != nullptr && verdict != nullptr, "null argument");
  return guarded([&] {
    const rkcd::EquivalenceVerdict v = rkcd::are_equivalent(a->value, b->value, seed, tolerances(tol));
    switch (v.verdict) {
      case rkcd::Verdict::Equivalent: *verdict = RKCD_EQUIVALENT; break;
      case rkcd::Verdict::NotEquivalent: *verdict = RKCD_NOT_EQUIVALENT; break;
      case rkcd::Verdict::Undecided: *verdict = RKCD_UNDECIDED; break;
      case rkcd::Verdict::VerificationFailed: *verdict = RKCD_VERDICT_FAILED; break;
    }
    if (witness != nullptr)
      *witness = (*verdict == RKCD_EQUIVALENT || *verdict == RKCD_UNDECIDED) ? new rkcd_holo{v.witness} : nullptr;
    emit(out, rkcd::verdict_to_json(v));
    return RKCD_OK;
  });
}

rkcd_status rkcd_kk1_check(const rkcd_kernel* a, const rkcd_kernel* b, const rkcd_holo* psi,
                           const rkcd_tolerances* tol, int* holds, double* residual) {
  RKCD_REQUIRE(a != nullptr && b != nullptr && psi != nullptr, "null argument");
  return guarded([&] {
    const rkcd::Kk1Report r = rkcd::kk1_check(a->value, b->value, psi->value, tolerances(tol));
    if (holds != nullptr) *holds = r.holds ? 1 : 0;
    if (residual != nullptr) *residual = r.residual;
    return RKCD_OK;
  });
}

rkcd_status rkcd_structure(const rkcd_holo* phi, const int* partition_a, size_t parts_a, const int* partition_b,
                           size_t parts_b, const rkcd_tolerances* tol, int* passed, char** out) {
  RKCD_REQUIRE(phi != nullptr && partition_a != nullptr && partition_b != nullptr, "null argument");
  return guarded([&] {
    const rkcd::IntertwinerReport r =
        rkcd::intertwiner_structure(phi->value, std::span<const int>(partition_a, parts_a),
                                    std::span<const int>(partition_b, parts_b), tolerances(tol));
    if (passed != nullptr) *passed = r.passed ? 1 : 0;
    emit(out, rkcd::intertwiner_report_to_json(r));
    return RKCD_OK;
  });
}

rkcd_status rkcd_generate(const char* spec, rkcd_kernel** out, char** truth) {
  RKCD_REQUIRE(spec != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    rkcd::GeneratedKernel g = rkcd::generate(rkcd::generator_spec_from_json(rkcd::parse_json(spec, "<spec>")));
    if (truth != nullptr) *truth = g.truth ? copy_string(rkcd::truth_to_json(*g.truth).dump(2)) : nullptr;
    *out = new rkcd_kernel{std::move(g.kernel)};
    return RKCD_OK;
  });
}

}  // extern "C"
