/* Copyright 2026 The ringqc Authors.
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

/* C interface to libringqc.
 *
 * Every function returns an rqc_status. On failure the message is kept per
 * thread and readable through rqc_last_error() until the next call on that
 * thread. Objects are opaque; each *_create or producing call has a
 * matching *_free, and freeing NULL is a no-op. Strings handed out by the
 * library are owned by the object they came from.
 */

#ifndef RINGQC_RINGQC_H_
#define RINGQC_RINGQC_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(RINGQC_BUILDING)
#define RQC_API __declspec(dllexport)
#else
#define RQC_API __declspec(dllimport)
#endif
#else
#define RQC_API __attribute__((visibility("default")))
#endif

typedef enum rqc_status {
  RQC_OK = 0,
  RQC_ERR_PARSE = 1,
  RQC_ERR_CAP = 2,
  RQC_ERR_PRECONDITION = 3,
  RQC_ERR_ARGUMENT = 4, /* NULL handle, index out of range */
  RQC_ERR_INTERNAL = 5
} rqc_status;

typedef enum rqc_format { RQC_FORMAT_TABLE = 0, RQC_FORMAT_RECORDS = 1 } rqc_format;

typedef struct rqc_config rqc_config;
typedef struct rqc_poly rqc_poly;
typedef struct rqc_factorization rqc_factorization;
typedef struct rqc_record rqc_record;
typedef struct rqc_record_list rqc_record_list;
typedef struct rqc_text rqc_text;

RQC_API const char* rqc_last_error(void);
RQC_API const char* rqc_version(void);

/* Configuration: caps and output format. Defaults match the C++ Limits. */
RQC_API rqc_status rqc_config_create(rqc_config** out);
RQC_API void rqc_config_free(rqc_config* cfg);
RQC_API rqc_status rqc_config_set_format(rqc_config* cfg, rqc_format format);
RQC_API rqc_status rqc_config_set_enum_cap(rqc_config* cfg, uint64_t cap);
RQC_API rqc_status rqc_config_set_divisor_cap(rqc_config* cfg, uint64_t cap);
RQC_API rqc_status rqc_config_set_rank_cap(rqc_config* cfg, uint64_t cap);
RQC_API rqc_status rqc_config_set_validate(rqc_config* cfg, int validate);

/* Binary polynomials, parsed from "x^3+x+1" or "0xB". */
RQC_API rqc_status rqc_poly_parse(const char* text, rqc_poly** out);
RQC_API void rqc_poly_free(rqc_poly* p);
RQC_API rqc_status rqc_poly_degree(const rqc_poly* p, int* out); /* -1 for zero */
RQC_API const char* rqc_poly_text(const rqc_poly* p);
RQC_API const char* rqc_poly_hex(const rqc_poly* p);

/* x^n + 1 factored over F2. Factor handles are borrowed from the owner. */
RQC_API rqc_status rqc_factor(const rqc_config* cfg, unsigned n, rqc_factorization** out);
RQC_API void rqc_factorization_free(rqc_factorization* f);
RQC_API size_t rqc_factorization_count(const rqc_factorization* f);
RQC_API rqc_status rqc_factorization_at(const rqc_factorization* f, size_t i,
                                        const rqc_poly** factor, unsigned* multiplicity);

/* CSS record for <v f1, (1+v) f2, (1+v^2) f3>. */
RQC_API rqc_status rqc_css_from_triple(const rqc_config* cfg, size_t n, const rqc_poly* f1,
                                       const rqc_poly* f2, const rqc_poly* f3,
                                       rqc_record** out);
RQC_API void rqc_record_free(rqc_record* r);
RQC_API rqc_status rqc_record_params(const rqc_record* r, size_t* N, long* K, unsigned* D);
RQC_API int rqc_record_validated(const rqc_record* r);
RQC_API const char* rqc_record_d_method(const rqc_record* r);
RQC_API size_t rqc_record_note_count(const rqc_record* r);
RQC_API const char* rqc_record_note(const rqc_record* r, size_t i);

RQC_API rqc_status rqc_search(const rqc_config* cfg, size_t n, int equal_only, long min_K,
                              size_t max_results, rqc_record_list** out);
RQC_API void rqc_record_list_free(rqc_record_list* list);
RQC_API size_t rqc_record_list_count(const rqc_record_list* list);
RQC_API const rqc_record* rqc_record_list_at(const rqc_record_list* list, size_t i);

/* Rendered command output plus the process exit code it calls for. */
RQC_API void rqc_text_free(rqc_text* t);
RQC_API const char* rqc_text_data(const rqc_text* t);
RQC_API int rqc_text_exit_code(const rqc_text* t);

RQC_API rqc_status rqc_run_factor(const rqc_config* cfg, unsigned n, rqc_text** out);
RQC_API rqc_status rqc_run_inspect(const rqc_config* cfg, size_t n, const char* f1,
                                   const char* f2, const char* f3, rqc_text** out);
RQC_API rqc_status rqc_run_search(const rqc_config* cfg, size_t n, int equal_only, long min_K,
                                  size_t max_results, rqc_text** out);
RQC_API rqc_status rqc_run_reproduce(const rqc_config* cfg, rqc_text** out);
RQC_API rqc_status rqc_run_audit(const rqc_config* cfg, size_t n_max, rqc_text** out);

#ifdef __cplusplus
}
#endif

#endif /* RINGQC_RINGQC_H_ */
