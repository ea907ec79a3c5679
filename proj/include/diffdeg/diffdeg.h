/*
 * Copyright 2026 The diffdeg Authors
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

#ifndef DIFFDEG_DIFFDEG_H
#define DIFFDEG_DIFFDEG_H

#include <stddef.h>
#include <stdint.h>

#if defined(DIFFDEG_BUILDING_LIBRARY)
#define DD_API __attribute__((visibility("default")))
#else
#define DD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every fallible call. */
typedef enum dd_status {
    DD_OK = 0,
    DD_ERR_INVALID_INPUT = 1,
    DD_ERR_UNSUPPORTED = 2,
    DD_ERR_MISMATCH = 3,
    DD_ERR_OUT_OF_RANGE = 4,
    DD_ERR_NO_REPRESENTATION = 5,
    DD_ERR_INCONSISTENT = 6,
    DD_ERR_INTERNAL = 7
} dd_status;

typedef enum dd_maxdeg_kind {
    DD_MAXDEG_BOUND = 0,
    DD_MAXDEG_CONSTANTS_ONLY = 1,
    DD_MAXDEG_TRIVIAL = 2
} dd_maxdeg_kind;

/* Degree value standing for INFINITE. */
#define DD_INFINITE UINT64_MAX

typedef struct dd_group dd_group;
typedef struct dd_table dd_table;
typedef struct dd_polyfract dd_polyfract;
typedef struct dd_maxdeg dd_maxdeg;
typedef struct dd_report dd_report;

/* Message of the last failed call on this thread; never NULL. */
DD_API const char *dd_last_error(void);
DD_API const char *dd_status_name(dd_status status);
/* Releases strings returned through `char **` out-parameters. */
DD_API void dd_string_free(char *s);

/* Groups: comma-separated moduli such as "4,3,5"; 0 is the integers. */
DD_API dd_status dd_group_parse(const char *spec, dd_group **out);
DD_API dd_status dd_group_format(const dd_group *g, char **out);
DD_API void dd_group_free(dd_group *g);

/* Function tables in the line-oriented "domain:/codomain:/x -> y" format. */
DD_API dd_status dd_table_parse(const char *text, dd_table **out);
DD_API dd_status dd_table_format(const dd_table *t, char **out);
DD_API dd_status dd_table_rank(const dd_table *t, size_t *out);
DD_API void dd_table_free(dd_table *t);

/* Functional and partial degrees; DD_INFINITE when unbounded. */
DD_API dd_status dd_fdeg(const dd_table *t, uint64_t *out);
DD_API dd_status dd_pdeg(const dd_table *t, size_t i, uint64_t *out);

/* `*finite` is 1 or 0. For infinite maps the witness is the prime pair
 * (from, to); both are 0 otherwise. Either witness pointer may be NULL. */
DD_API dd_status dd_classify(const dd_table *t, int *finite, int64_t *witness_from,
                             int64_t *witness_to);

/* Polyfracts in the "vars:/codomain:/delta : b" format. */
DD_API dd_status dd_interpolate(const dd_table *t, dd_polyfract **out);
DD_API dd_status dd_polyfract_parse(const char *text, dd_polyfract **out);
DD_API dd_status dd_polyfract_format(const dd_polyfract *p, char **out);
DD_API dd_status dd_polyfract_vars(const dd_polyfract *p, size_t *out);
DD_API dd_status dd_polyfract_codomain_rank(const dd_polyfract *p, size_t *out);
DD_API dd_status dd_polyfract_degree(const dd_polyfract *p, uint64_t *out);
/* `x` has `vars` entries; `out` receives `codomain_rank` entries. */
DD_API dd_status dd_polyfract_eval(const dd_polyfract *p, const int64_t *x, size_t n, int64_t *out,
                                   size_t out_len);
DD_API dd_status dd_polyfract_is_periodic(const dd_polyfract *p, const dd_group *periods, int *out);
DD_API dd_status dd_polyfract_tabulate(const dd_polyfract *p, const dd_group *domain, dd_table **out);
DD_API void dd_polyfract_free(dd_polyfract *p);

/* Largest finite degree of a map between two finite groups. */
DD_API dd_status dd_maxdeg_compute(const dd_group *domain, const dd_group *codomain, dd_maxdeg **out);
DD_API dd_maxdeg_kind dd_maxdeg_get_kind(const dd_maxdeg *m);
DD_API uint64_t dd_maxdeg_bound(const dd_maxdeg *m);
DD_API size_t dd_maxdeg_prime_count(const dd_maxdeg *m);
/* Per-prime entry k; `domain_part` and `codomain_part` may be NULL. */
DD_API dd_status dd_maxdeg_prime(const dd_maxdeg *m, size_t k, int64_t *prime, uint64_t *bound,
                                 char **domain_part, char **codomain_part);
DD_API void dd_maxdeg_free(dd_maxdeg *m);

/* Nilpotency degree of the augmentation ideal of Z_{p^beta}[Z_{p^a_1} x ...]. */
DD_API dd_status dd_nilpotency_formula(int64_t p, const unsigned *alphas, size_t n, unsigned beta,
                                       uint64_t *out);
DD_API dd_status dd_nilpotency_oracle(int64_t p, const unsigned *alphas, size_t n, unsigned beta,
                                      uint64_t *out);

/* Verification suites: "small", "lemma51", "roundtrip", "nilpotency". */
DD_API size_t dd_verify_suite_count(void);
DD_API const char *dd_verify_suite_name(size_t k);
DD_API dd_status dd_verify_run(const char *suite, dd_report **out);
DD_API size_t dd_report_count(const dd_report *r);
/* Borrowed strings, valid until dd_report_free. */
DD_API dd_status dd_report_entry(const dd_report *r, size_t k, const char **name, int *passed,
                                 const char **detail);
DD_API void dd_report_free(dd_report *r);

#ifdef __cplusplus
}
#endif

#endif /* DIFFDEG_DIFFDEG_H */
