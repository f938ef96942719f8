/*
 * Copyright 2026 The mdmp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef MDMP_H
#define MDMP_H

/*
 * C interface to the mdmp library.
 *
 * Matrices are opaque complex double handles. Every fallible call returns an
 * mdmp_status; on failure mdmp_last_error() describes the problem (the text
 * is thread-local and valid until the next call on the same thread). Strings
 * handed out by the library are released with mdmp_string_free, matrices
 * with mdmp_matrix_free. Output pointers are only written on success.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MDMP_BUILDING_LIBRARY)
#    define MDMP_API __declspec(dllexport)
#  else
#    define MDMP_API __declspec(dllimport)
#  endif
#else
#  define MDMP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mdmp_matrix mdmp_matrix;

typedef enum mdmp_status {
    MDMP_OK = 0,
    MDMP_INVALID_ARGUMENT,
    MDMP_PARSE_ERROR,
    MDMP_SHAPE_MISMATCH,
    MDMP_ZERO_MATRIX,
    MDMP_NILPOTENT_TERMINATION,
    MDMP_INDEX_TOO_LARGE,
    MDMP_NOT_EXISTS,
    MDMP_NEAR_SINGULAR_FACTOR,
    MDMP_SINGULAR_DELTA,
    MDMP_SINGULAR_G1,
    MDMP_ZERO_POWER,
    MDMP_NO_CONVERGENCE,
    MDMP_SPECTRUM_NOT_STABLE,
    MDMP_CONDITION_FAILED,
    MDMP_FULL_RANK,
    MDMP_SINGULAR_WV,
    MDMP_SINGULAR_BORDERED,
    MDMP_INTERNAL_ERROR
} mdmp_status;

typedef struct mdmp_tolerances {
    double rank_rel_tol; /* singular values below this fraction of the largest are zero */
    double eq_rel_tol;   /* accepted relative residual */
    double cond_max;     /* largest condition number treated as invertible */
} mdmp_tolerances;

typedef struct mdmp_limit_schedule {
    double lambda_start;
    double decay;
    int max_steps;
    double conv_tol;
} mdmp_limit_schedule;

typedef struct mdmp_quadrature {
    double t_max; /* <= 0 selects 40 / min Re(spectrum) */
    int panels;
    double spectral_margin;
} mdmp_quadrature;

typedef struct mdmp_options {
    mdmp_tolerances tol;
    mdmp_limit_schedule schedule;
    mdmp_quadrature quadrature;
    const char* formula; /* limit route: left-resolvent (default), right-resolvent,
                            power-resolvent, adjoint-resolvent */
} mdmp_options;

MDMP_API void mdmp_options_default(mdmp_options* options);
MDMP_API const char* mdmp_status_name(mdmp_status status);
MDMP_API const char* mdmp_last_error(void);
MDMP_API const char* mdmp_version(void);

MDMP_API mdmp_status mdmp_matrix_new(size_t rows, size_t cols, mdmp_matrix** out);
/* row-major (re, im) pairs, 2 * rows * cols doubles */
MDMP_API mdmp_status mdmp_matrix_from_interleaved(size_t rows, size_t cols, const double* values,
                                                  mdmp_matrix** out);
MDMP_API mdmp_status mdmp_matrix_copy(const mdmp_matrix* source, mdmp_matrix** out);
MDMP_API void mdmp_matrix_free(mdmp_matrix* matrix);
MDMP_API size_t mdmp_matrix_rows(const mdmp_matrix* matrix);
MDMP_API size_t mdmp_matrix_cols(const mdmp_matrix* matrix);
MDMP_API mdmp_status mdmp_matrix_get(const mdmp_matrix* matrix, size_t row, size_t col, double* re, double* im);
MDMP_API mdmp_status mdmp_matrix_set(mdmp_matrix* matrix, size_t row, size_t col, double re, double im);

/* Matrix Market (array or coordinate) or the JSON form
 * {"rows": m, "cols": n, "data": [[re, im], ...]} in row-major order. */
MDMP_API mdmp_status mdmp_matrix_load(const char* path, mdmp_matrix** out);
MDMP_API mdmp_status mdmp_matrix_parse(const char* text, mdmp_matrix** out);
/* format: "json", "matrix-market" or "pretty"; precision in [3, 17] */
MDMP_API mdmp_status mdmp_matrix_format(const mdmp_matrix* matrix, const char* format, int precision, char** out);
MDMP_API void mdmp_string_free(char* text);

/* kind: moore-penrose, drazin, group, dmp, minkowski, mdmp, dual-mdmp, m-core
 * route (NULL for the default "definitional"):
 *   mdmp       definitional | hs | hs-partition | fullrank | composite |
 *              composite-right | limit | integral
 *   minkowski  definitional | hs | limit
 *   drazin     definitional | hs
 *   dual-mdmp  definitional | hs */
MDMP_API mdmp_status mdmp_compute(const mdmp_matrix* a, const char* kind, const char* route,
                                  const mdmp_options* options, mdmp_matrix** out);

/* system: moore-penrose, minkowski, drazin, mdmp, characterizations,
 * properties (x may be NULL). Writes a JSON report and whether it passed. */
MDMP_API mdmp_status mdmp_verify(const mdmp_matrix* a, const mdmp_matrix* x, const char* system,
                                 const mdmp_options* options, char** report_json, int* passed);

/* mode: projected | leastnorm | cramer. b, v are n x 1; v only for projected,
 * V and W only for cramer (both or neither). x receives the solution. */
MDMP_API mdmp_status mdmp_solve(const mdmp_matrix* a, const mdmp_matrix* b, const char* mode,
                                const mdmp_matrix* v, const mdmp_matrix* V, const mdmp_matrix* W,
                                const mdmp_options* options, mdmp_matrix** x, char** report_json);

/* Worked-example assertions as a JSON array. list_only skips evaluation;
 * fixture_tol <= 0 selects 1e-4. prefix (may be NULL) filters by name. */
MDMP_API mdmp_status mdmp_reproduce(const mdmp_options* options, double fixture_tol, const char* prefix,
                                    int list_only, char** report_json, int* all_passed);

/* structure: mixed (default), nilpotent, nonsingular */
MDMP_API mdmp_status mdmp_generate(uint64_t seed, size_t order, size_t index, const char* structure,
                                   const mdmp_options* options, mdmp_matrix** out);

#ifdef __cplusplus
}
#endif

#endif
