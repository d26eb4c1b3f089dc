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

/*
  C interface to the rkcd library: truncated matrix-valued kernels, their
  curvature, normalization, irreducible decomposition and unitary
  equivalence. Handles are opaque; every function returns an rkcd_status and
  leaves a message for rkcd_last_error() on failure. Strings returned through
  char** are owned by the caller and released with rkcd_string_free().
*/

#ifndef RKCD_H
#define RKCD_H

#include <stddef.h>
#include <stdint.h>

#if defined(RKCD_BUILDING)
#define RKCD_API __attribute__((visibility("default")))
#else
#define RKCD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rkcd_kernel rkcd_kernel;
typedef struct rkcd_holo rkcd_holo;

typedef enum rkcd_status {
  RKCD_OK = 0,
  RKCD_INVALID_ARGUMENT = 1,
  RKCD_PARSE_ERROR = 2,
  RKCD_RANK_MISMATCH = 3,
  RKCD_SINGULAR = 4,
  RKCD_NOT_POSITIVE_DEFINITE = 5,
  RKCD_NOT_NORMALIZED = 6,
  RKCD_EMPTY_BOX = 7,
  RKCD_HYPOTHESIS_VIOLATED = 8,
  RKCD_INCONSISTENT = 9,
  RKCD_VERIFICATION_FAILED = 10,
  RKCD_INTERNAL = 11
} rkcd_status;

typedef enum rkcd_verdict {
  RKCD_EQUIVALENT = 0,
  RKCD_NOT_EQUIVALENT = 1,
  RKCD_UNDECIDED = 2,
  RKCD_VERDICT_FAILED = 3
} rkcd_verdict;

typedef enum rkcd_convention { RKCD_METRIC_DIRECT = 0, RKCD_METRIC_OMEGA = 1 } rkcd_convention;

typedef struct rkcd_tolerances {
  double tau_zero;
  double tau_psd;
  double tau_rank;
  double delta_gap;
} rkcd_tolerances;

/* Fills 1e-9, 1e-9, 1e-8, 1e-6. A NULL tolerances argument elsewhere means these. */
RKCD_API void rkcd_default_tolerances(rkcd_tolerances* out);

/* Message of the last failure on the calling thread; empty if none. */
RKCD_API const char* rkcd_last_error(void);
RKCD_API const char* rkcd_status_string(rkcd_status status);
RKCD_API void rkcd_string_free(char* s);

/* Kernels. */
RKCD_API rkcd_status rkcd_kernel_from_json(const char* json, rkcd_kernel** out);
RKCD_API rkcd_status rkcd_kernel_to_json(const rkcd_kernel* k, char** out);
RKCD_API void rkcd_kernel_free(rkcd_kernel* k);
RKCD_API int rkcd_kernel_rank(const rkcd_kernel* k);
RKCD_API int rkcd_kernel_degree(const rkcd_kernel* k);
RKCD_API rkcd_status rkcd_kernel_truncate(const rkcd_kernel* k, int degree, rkcd_kernel** out);
/* Writes K(mu, lambda) row-major as 2 n^2 doubles (re, im). Fails when
   |mu| or |lambda| exceeds radius. */
RKCD_API rkcd_status rkcd_kernel_eval(const rkcd_kernel* k, double mu_re, double mu_im, double lambda_re,
                                      double lambda_im, double radius, double* out);
/* Psi(mu) K(mu, lambda) Phi(lambda)^*. */
RKCD_API rkcd_status rkcd_congruence(const rkcd_holo* psi, const rkcd_kernel* k, const rkcd_holo* phi,
                                     rkcd_kernel** out);

/* Holomorphic matrix series. */
RKCD_API rkcd_status rkcd_holo_from_json(const char* json, rkcd_holo** out);
RKCD_API rkcd_status rkcd_holo_to_json(const rkcd_holo* h, char** out);
RKCD_API void rkcd_holo_free(rkcd_holo* h);
RKCD_API rkcd_status rkcd_holo_invert(const rkcd_holo* h, rkcd_holo** out);

/* Operations. JSON outputs may be NULL when not wanted. */
RKCD_API rkcd_status rkcd_validate(const rkcd_kernel* k, const rkcd_tolerances* tol, int* passed, char** report);
RKCD_API rkcd_status rkcd_curvature(const rkcd_kernel* k, int order, rkcd_convention convention,
                                    const rkcd_tolerances* tol, char** out);
RKCD_API rkcd_status rkcd_normalize(const rkcd_kernel* k, const rkcd_tolerances* tol, rkcd_kernel** normalized,
                                    rkcd_holo** gauge);
/* Returns RKCD_VERIFICATION_FAILED (with the report still written) when the
   decomposition does not verify. */
RKCD_API rkcd_status rkcd_decompose(const rkcd_kernel* k, uint64_t seed, const rkcd_tolerances* tol, char** out);
/* Witness satisfies a = witness b witness^*; written only for RKCD_EQUIVALENT
   and RKCD_UNDECIDED. */
RKCD_API rkcd_status rkcd_equivalent(const rkcd_kernel* a, const rkcd_kernel* b, uint64_t seed,
                                     const rkcd_tolerances* tol, rkcd_verdict* verdict, rkcd_holo** witness,
                                     char** out);
/* Oriented so that b = psi a psi^*. */
RKCD_API rkcd_status rkcd_kk1_check(const rkcd_kernel* a, const rkcd_kernel* b, const rkcd_holo* psi,
                                    const rkcd_tolerances* tol, int* holds, double* residual);
RKCD_API rkcd_status rkcd_structure(const rkcd_holo* phi, const int* partition_a, size_t parts_a,
                                    const int* partition_b, size_t parts_b, const rkcd_tolerances* tol,
                                    int* passed, char** out);
/* spec is a generator JSON object, e.g. {"kind": "disguised", "components":
   ["szego*2", "bergman"], "seed": 7, "degree": 8}. truth receives the hidden
   structure for disguised instances and NULL otherwise. */
RKCD_API rkcd_status rkcd_generate(const char* spec, rkcd_kernel** out, char** truth);

#ifdef __cplusplus
}
#endif

#endif /* RKCD_H */
