// Copyright 2026 The Meanpart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MEANPART_MEANPART_H_
#define MEANPART_MEANPART_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MEANPART_BUILDING)
#define MP_API __declspec(dllexport)
#else
#define MP_API __declspec(dllimport)
#endif
#else
#define MP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mp_status {
  MP_OK = 0,
  MP_INVALID_ARGUMENT = 1,
  MP_INVALID_MATRIX = 2,
  MP_DIMENSION_MISMATCH = 3,
  MP_INDEX_OUT_OF_RANGE = 4,
  MP_SYMMETRIC_CENTER = 5,
  MP_BUDGET_EXCEEDED = 6,
  MP_ELL_TOO_LARGE = 7,
  MP_EMPTY_SET = 8,
  MP_REJECTION_EXHAUSTED = 9,
  MP_PARSE_ERROR = 10,
  MP_LABEL_OUT_OF_RANGE = 11,
  MP_IO_ERROR = 12,
  MP_INVALID_CONFIG = 13,
  MP_UNKNOWN_COMMAND = 14,
  MP_INTERNAL = 15,
  MP_OUT_OF_MEMORY = 16,
} mp_status;

typedef struct mp_partition mp_partition;
typedef struct mp_sample mp_sample;

typedef enum mp_mean_method {
  MP_MEAN_AUTO = 0,
  MP_MEAN_EXACT = 1,
  MP_MEAN_HEURISTIC = 2,
} mp_mean_method;

typedef struct mp_mean_options {
  mp_mean_method method;
  uint64_t budget;
  size_t max_iter;
  double tol;
  size_t restarts; /* 0 = min(n, 8) */
  uint64_t seed;
} mp_mean_options;

typedef struct mp_mean_info {
  double frechet_value;
  size_t iterations;
  int converged;
  int exact;
  size_t mean_set_size;
} mp_mean_info;

MP_API const char* mp_version(void);
MP_API const char* mp_status_name(mp_status status);
/* Message of the last failure on the calling thread; "" if none. */
MP_API const char* mp_last_error_message(void);

/* Hard partition from m labels in [0, ell). */
MP_API mp_status mp_partition_from_labels(const int* labels, size_t m, size_t ell,
                                          mp_partition** out);
/* Soft partition from an ell x m row-major matrix with unit column sums. */
MP_API mp_status mp_partition_from_matrix(const double* entries, size_t ell, size_t m,
                                          mp_partition** out);
MP_API void mp_partition_free(mp_partition* p);
MP_API size_t mp_partition_ell(const mp_partition* p);
MP_API size_t mp_partition_m(const mp_partition* p);
MP_API int mp_partition_is_hard(const mp_partition* p);
/* Copies the canonical representative, row-major, into ell * m doubles. */
MP_API mp_status mp_partition_copy_canonical(const mp_partition* p, double* out, size_t len);
MP_API mp_status mp_partition_equal(const mp_partition* a, const mp_partition* b, double tol,
                                    int* out);

MP_API mp_status mp_sample_create(mp_sample** out);
/* Copies p into the sample. */
MP_API mp_status mp_sample_append(mp_sample* s, const mp_partition* p);
/* ell == 0 lets the file header or the largest label decide. */
MP_API mp_status mp_sample_load(const char* path, size_t ell, mp_sample** out);
MP_API mp_status mp_sample_save_labels(const mp_sample* s, const char* path);
MP_API size_t mp_sample_size(const mp_sample* s);
/* New handle owned by the caller. */
MP_API mp_status mp_sample_get(const mp_sample* s, size_t index, mp_partition** out);
MP_API void mp_sample_free(mp_sample* s);

/* perm may be NULL; otherwise it receives ell entries. */
MP_API mp_status mp_distance(const mp_partition* x, const mp_partition* y, double* out,
                             size_t* perm);
/* +infinity when ell == 1. */
MP_API mp_status mp_degree_of_asymmetry(const mp_partition* z, double* out);
MP_API mp_status mp_in_asymmetry_ball(const mp_partition* x, const mp_partition* z, int strict,
                                      int* out);
MP_API mp_status mp_frechet(const mp_sample* s, const mp_partition* z, double* out);

MP_API void mp_mean_options_default(mp_mean_options* options);
/* options may be NULL; info may be NULL. */
MP_API mp_status mp_mean(const mp_sample* s, const mp_mean_options* options, mp_partition** out,
                         mp_mean_info* info);

MP_API mp_status mp_binomial_majority_prob(size_t n, double p, double* out);
MP_API mp_status mp_condorcet_limit(double p, double* out);

/* Runs a CLI command on a JSON config. *report receives the report JSON, or
   the error JSON on failure; *csv is set for simulate and NULL otherwise.
   Free both with mp_string_free. */
MP_API mp_status mp_run_command(const char* command, const char* config_json, char** report,
                                char** csv);
MP_API void mp_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif  // MEANPART_MEANPART_H_
