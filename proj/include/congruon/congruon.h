/* Copyright (C) 2026 The congruon authors.
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */
#ifndef CONGRUON_H
#define CONGRUON_H

/*
 * C interface to libcongruon.
 *
 * Every function that can fail returns a cg_status and leaves a message in
 * its context (cg_last_error). Integers that may be large cross the boundary
 * as decimal strings; polynomials as comma-separated ascending coefficients.
 * Strings returned through char** are owned by the caller and released with
 * cg_string_free. A context must not be used by two threads at once; handles
 * other than contexts may be shared read-only.
 */

#include <stddef.h>

#if defined(CONGRUON_BUILDING)
#define CG_API __attribute__((visibility("default")))
#else
#define CG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values match the CLI exit codes. */
typedef enum cg_status {
  CG_OK = 0,
  CG_ERR_INTERNAL = 1,
  CG_ERR_PARSE = 2,
  CG_ERR_NOT_COPRIME = 3,
  CG_ERR_CAP = 4,
  CG_ERR_PRECONDITION = 5,
  CG_ERR_IO = 6
} cg_status;

typedef struct cg_context cg_context;
typedef struct cg_poly cg_poly;
typedef struct cg_dataset cg_dataset;
typedef struct cg_level cg_level;
typedef struct cg_record cg_record;
typedef struct cg_eisenstein cg_eisenstein;

CG_API const char* cg_version(void);
CG_API void cg_string_free(char* s);

/* Contexts. The factor cap starts from CONGRUON_FACTOR_CAP when set. */
CG_API cg_context* cg_context_new(void);
CG_API void cg_context_free(cg_context* ctx);
CG_API const char* cg_last_error(const cg_context* ctx);
CG_API cg_status cg_context_set_factor_cap(cg_context* ctx, long cap);
CG_API cg_status cg_context_set_level_cap(cg_context* ctx, long cap);
CG_API cg_status cg_context_set_threads(cg_context* ctx, unsigned threads);

/* Polynomials. */
CG_API cg_status cg_poly_parse(cg_context* ctx, const char* ascending, cg_poly** out);
CG_API void cg_poly_free(cg_poly* p);
CG_API int cg_poly_degree(const cg_poly* p);
/* pretty != 0 gives descending notation such as "X^2 - 48*X - 720". */
CG_API cg_status cg_poly_to_string(cg_context* ctx, const cg_poly* p, int pretty, char** out);

/* c = r P + s Q. */
CG_API cg_status cg_congruence_number(cg_context* ctx, const cg_poly* p, const cg_poly* q, char** c,
                                      cg_poly** r, cg_poly** s);
/* Comma-separated primes dividing c(P, Q), ascending; "" if c = 1. */
CG_API cg_status cg_congruence_primes(cg_context* ctx, const cg_poly* p, const cg_poly* q, char** out);

typedef struct cg_root_result {
  long n;        /* largest n with a root congruence mod ell^n */
  long lower;    /* congruence-number bounds */
  long upper;
  int exact;     /* lower == upper */
  int newton;    /* n came from the Newton polygon */
  char case_tag[16];
} cg_root_result;

CG_API cg_status cg_root_congruence(cg_context* ctx, const cg_poly* p, const cg_poly* q, const char* ell,
                                    cg_root_result* out);

/* Datasets of newform classes, from text or from the modular symbols engine. */
CG_API cg_status cg_dataset_parse(cg_context* ctx, const char* text, cg_dataset** out);
CG_API cg_status cg_dataset_read_file(cg_context* ctx, const char* path, cg_dataset** out);
CG_API void cg_dataset_free(cg_dataset* d);
CG_API size_t cg_dataset_size(const cg_dataset* d);
/* Borrowed; valid while d lives. NULL past the end. */
CG_API const char* cg_dataset_id(const cg_dataset* d, size_t i);
CG_API cg_status cg_dataset_serialize(cg_context* ctx, const cg_dataset* d, char** out);
/* FORM/CP lines for one class (id) or all (id == NULL) at the given primes,
 * computing engine charpolys as needed. */
CG_API cg_status cg_dataset_export(cg_context* ctx, cg_dataset* d, const char* id, const long* primes,
                                   size_t nprimes, char** out);
CG_API cg_status cg_class_charpoly(cg_context* ctx, cg_dataset* d, const char* id, long p, cg_poly** out);

/* Modular symbols of weight 2 for Gamma_0(N). */
CG_API cg_status cg_level_build(cg_context* ctx, long level, cg_level** out);
CG_API void cg_level_free(cg_level* l);
CG_API cg_status cg_level_dimensions(cg_context* ctx, const cg_level* l, size_t* full, size_t* cuspidal,
                                     size_t* new_part);
CG_API cg_status cg_level_classes(cg_context* ctx, const cg_level* l, cg_dataset** out);

/* Sturm bound B = k b / 12 - (b - 1) / N as "num/den", and b. */
CG_API cg_status cg_sturm_bound(cg_context* ctx, long level, long weight, char** bound, char** index,
                                int* insufficient);

typedef struct cg_compare_options {
  int skip_t_ell;
  int include_p_dividing_levels;
  long prime_cutoff; /* 0 = Sturm bound */
  int assert_irreducible;
} cg_compare_options;

CG_API void cg_compare_options_init(cg_compare_options* o);
CG_API cg_status cg_compare(cg_context* ctx, cg_dataset* df, const char* f_id, cg_dataset* dg, const char* g_id,
                            const cg_compare_options* opts, cg_record** out);
CG_API void cg_record_free(cg_record* r);
CG_API cg_status cg_record_bounds(cg_context* ctx, const cg_record* r, char** l_minus, char** l_plus);
CG_API cg_status cg_record_serialize(cg_context* ctx, const cg_record* r, char** out);
/* *appended = 0 when an equal (f, g, options) record is already stored. */
CG_API cg_status cg_store_append(cg_context* ctx, const char* path, const cg_record* r, int* appended);
CG_API cg_status cg_store_compact(cg_context* ctx, const char* path, size_t* kept);

/* Eisenstein congruences. eis_data may be NULL at prime level; cutoff 0
 * means k b / 12. */
CG_API cg_status cg_eisenstein_scan(cg_context* ctx, cg_dataset* d, const char* id, cg_dataset* eis_data,
                                    const char* eis_id, long cutoff, cg_eisenstein** out);
CG_API void cg_eisenstein_free(cg_eisenstein* e);
CG_API cg_status cg_eisenstein_summary(cg_context* ctx, const cg_eisenstein* e, char** cutoff, char** numerator,
                                       int* insufficient);
CG_API size_t cg_eisenstein_count(const cg_eisenstein* e);
CG_API cg_status cg_eisenstein_entry(cg_context* ctx, const cg_eisenstein* e, size_t i, char** ell, long* exponent,
                                     long* v_numerator);

typedef struct cg_level_raising {
  long e_minus;
  long e_plus;
  long e_square;
} cg_level_raising;

CG_API cg_status cg_level_raising_check(cg_context* ctx, cg_dataset* d, const char* id, long p, const char* ell,
                                        cg_level_raising* out, char** c_minus, char** c_plus);

#ifdef __cplusplus
}
#endif

#endif /* CONGRUON_H */
