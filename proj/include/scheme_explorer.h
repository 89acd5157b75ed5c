/*
 * Copyright 2026 The scheme-explorer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface of libscheme_explorer.
 *
 * Objects are opaque handles released with their *_free function.  Every
 * fallible call returns an scx_status; on failure the message of the last
 * error on the calling thread is available from scx_last_error().  Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with scx_string_free().
 */

#ifndef SCHEME_EXPLORER_H
#define SCHEME_EXPLORER_H

#include <stddef.h>

#if defined(_WIN32)
#define SCX_API __declspec(dllexport)
#else
#define SCX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scx_status {
  SCX_OK = 0,
  SCX_ERR_ZERO_POLYNOMIAL,
  SCX_ERR_CONSTANT_POLYNOMIAL,
  SCX_ERR_UNSUPPORTED_DOMAIN,
  SCX_ERR_UNSUPPORTED_DEGREE,
  SCX_ERR_INFINITE_DOMAIN,
  SCX_ERR_NOT_INVERTIBLE,
  SCX_ERR_NOT_HOMOGENEOUS,
  SCX_ERR_NON_FIELD_BASE,
  SCX_ERR_UNDECIDABLE,
  SCX_ERR_UNDECIDABLE_CONTEXT,
  SCX_ERR_VARIABLE_CLASH,
  SCX_ERR_NO_CANONICAL_MAP,
  SCX_ERR_NOT_CATALOGUED,
  SCX_ERR_FACTORIZATION_UNAVAILABLE,
  SCX_ERR_UNSUPPORTED,
  SCX_ERR_RESIDUE_FIELD_NOT_REPRESENTABLE,
  SCX_ERR_INTEGRALITY_NOT_WITNESSED,
  SCX_ERR_UNIT_IDEAL,
  SCX_ERR_NILPOTENT_COORDINATE,
  SCX_ERR_DENOMINATOR_VANISHES,
  SCX_ERR_ALL_ZERO,
  SCX_ERR_INFINITE_SPECTRUM,
  SCX_ERR_NON_INVERTIBLE_UNIT,
  SCX_ERR_INVALID_MORPHISM,
  SCX_ERR_INVALID_ARGUMENT,
  SCX_ERR_SYNTAX_ERROR,
  SCX_ERR_INTERNAL = 100
} scx_status;

typedef struct scx_algebra scx_algebra;
typedef struct scx_graded scx_graded;

typedef struct scx_run_options {
  int json;                /* nonzero: JSON report */
  long bound;              /* default --bound */
  unsigned long long seed; /* default --seed */
} scx_run_options;

SCX_API const char* scx_version(void);
/* "NotInvertible", "SyntaxError", ...; "Ok" for SCX_OK. */
SCX_API const char* scx_status_name(scx_status status);
/* Message of the last failure on this thread; empty when none. */
SCX_API const char* scx_last_error(void);
SCX_API void scx_string_free(char* s);

/* Scripts.  exit_code receives 0 (ok), 1 (a query failed) or 2 (syntax
 * error); the call itself fails only on invalid arguments. */
SCX_API scx_run_options scx_default_run_options(void);
SCX_API scx_status scx_run_script(const char* source, const scx_run_options* options, char** output, int* exit_code);

/* Presented algebras, e.g. "ZZ[X]/(6*X^2+18*X-3)". */
SCX_API scx_status scx_algebra_parse(const char* text, scx_algebra** out);
SCX_API void scx_algebra_free(scx_algebra* a);
SCX_API scx_status scx_algebra_to_string(const scx_algebra* a, char** out);
SCX_API scx_status scx_algebra_specialize(const scx_algebra* a, const char* domain, scx_algebra** out);
SCX_API scx_status scx_algebra_tensor(const scx_algebra* a, const scx_algebra* b, scx_algebra** out);
SCX_API scx_status scx_algebra_is_zero_ring(const scx_algebra* a, int* out);
/* One-line structure summary ("product of 2 fields", ...). */
SCX_API scx_status scx_algebra_describe(const scx_algebra* a, char** out);
/* minus_infinity is set for the zero ring, value holds the dimension otherwise. */
SCX_API scx_status scx_algebra_krull_dimension(const scx_algebra* a, long* value, int* minus_infinity);

/* Graded algebras, e.g. "P^2(GF(5))" or "QQ[T0,T1,T2]/(T0*T2-T1^2)". */
SCX_API scx_status scx_graded_parse(const char* text, scx_graded** out);
SCX_API void scx_graded_free(scx_graded* g);
/* Number of rational points over a finite base field. */
SCX_API scx_status scx_graded_point_count(const scx_graded* g, size_t* out);
SCX_API scx_status scx_graded_chart_count(const scx_graded* g, size_t* out);

#ifdef __cplusplus
}
#endif

#endif /* SCHEME_EXPLORER_H */
