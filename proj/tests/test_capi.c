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

#include <math.h>
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "meanpart/meanpart.h"

static int failures = 0;

#define EXPECT(cond)                                               \
  do {                                                             \
    if (!(cond)) {                                                 \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                  \
    }                                                              \
  } while (0)

int main(void) {
  EXPECT(strcmp(mp_version(), "0.1.0") == 0);
  EXPECT(strcmp(mp_status_name(MP_PARSE_ERROR), "parse-error") == 0);
  EXPECT(strcmp(mp_status_name(MP_OK), "ok") == 0);

  const int xl[] = {0, 0, 1};
  const int yl[] = {0, 1, 1};
  mp_partition *x = NULL, *y = NULL;
  EXPECT(mp_partition_from_labels(xl, 3, 2, &x) == MP_OK);
  EXPECT(mp_partition_from_labels(yl, 3, 2, &y) == MP_OK);
  EXPECT(mp_partition_ell(x) == 2 && mp_partition_m(x) == 3 && mp_partition_is_hard(x));

  double d = 0.0;
  size_t perm[2];
  EXPECT(mp_distance(x, y, &d, perm) == MP_OK);
  EXPECT(fabs(d - sqrt(2.0)) < 1e-12);
  EXPECT(perm[0] == 0 && perm[1] == 1);

  double alpha = 0.0;
  EXPECT(mp_degree_of_asymmetry(x, &alpha) == MP_OK);
  EXPECT(fabs(alpha - sqrt(6.0)) < 1e-12);
  int inside = 0;
  EXPECT(mp_in_asymmetry_ball(x, x, 1, &inside) == MP_OK && inside == 1);

  double canon[6];
  EXPECT(mp_partition_copy_canonical(x, canon, 6) == MP_OK);
  EXPECT(canon[0] == 0.0 && canon[2] == 1.0 && canon[3] == 1.0);
  EXPECT(mp_partition_copy_canonical(x, canon, 5) == MP_DIMENSION_MISMATCH);

  const int bad[] = {0, 5};
  mp_partition* nothing = NULL;
  EXPECT(mp_partition_from_labels(bad, 2, 2, &nothing) == MP_LABEL_OUT_OF_RANGE);
  EXPECT(nothing == NULL);
  EXPECT(strlen(mp_last_error_message()) > 0);
  const double skew[] = {0.5, 0.5, 0.6, 0.5};
  EXPECT(mp_partition_from_matrix(skew, 2, 2, &nothing) == MP_INVALID_MATRIX);
  EXPECT(mp_distance(NULL, y, &d, NULL) == MP_INVALID_ARGUMENT);

  mp_sample* s = NULL;
  EXPECT(mp_sample_create(&s) == MP_OK);
  EXPECT(mp_sample_append(s, x) == MP_OK);
  EXPECT(mp_sample_append(s, y) == MP_OK);
  EXPECT(mp_sample_size(s) == 2);

  double f = 0.0;
  EXPECT(mp_frechet(s, x, &f) == MP_OK && fabs(f - 1.0) < 1e-12);

  mp_mean_options opts;
  mp_mean_options_default(&opts);
  EXPECT(opts.budget == 1000000 && opts.max_iter == 100);
  mp_partition* mean = NULL;
  mp_mean_info info;
  EXPECT(mp_mean(s, &opts, &mean, &info) == MP_OK);
  EXPECT(fabs(info.frechet_value - 0.5) < 1e-12);
  EXPECT(info.exact == 1 && info.mean_set_size == 1);
  EXPECT(!mp_partition_is_hard(mean));
  const double mid[] = {1.0, 0.5, 0.0, 0.0, 0.5, 1.0};
  mp_partition* expect_mid = NULL;
  EXPECT(mp_partition_from_matrix(mid, 2, 3, &expect_mid) == MP_OK);
  int same = 0;
  EXPECT(mp_partition_equal(mean, expect_mid, 1e-12, &same) == MP_OK && same == 1);

  opts.method = MP_MEAN_HEURISTIC;
  mp_partition* heur = NULL;
  EXPECT(mp_mean(s, &opts, &heur, NULL) == MP_OK);
  EXPECT(mp_partition_equal(heur, expect_mid, 1e-9, &same) == MP_OK && same == 1);

  mp_partition* got = NULL;
  EXPECT(mp_sample_get(s, 1, &got) == MP_OK);
  EXPECT(mp_partition_equal(got, y, 0.0, &same) == MP_OK && same == 1);
  mp_partition* missing = NULL;
  EXPECT(mp_sample_get(s, 9, &missing) == MP_INDEX_OUT_OF_RANGE && missing == NULL);

  const char* path = "meanpart_capi_sample.txt";
  EXPECT(mp_sample_save_labels(s, path) == MP_OK);
  mp_sample* loaded = NULL;
  EXPECT(mp_sample_load(path, 0, &loaded) == MP_OK);
  EXPECT(mp_sample_size(loaded) == 2);
  mp_sample* absent = NULL;
  EXPECT(mp_sample_load("/nonexistent/file.txt", 0, &absent) == MP_IO_ERROR && absent == NULL);

  double prob = 0.0;
  EXPECT(mp_binomial_majority_prob(3, 0.6, &prob) == MP_OK && fabs(prob - 0.648) < 1e-14);
  EXPECT(mp_condorcet_limit(0.5, &prob) == MP_OK && prob == 0.5);
  EXPECT(mp_binomial_majority_prob(0, 0.6, &prob) == MP_INVALID_ARGUMENT);

  char* report = NULL;
  char* csv = NULL;
  char config[256];
  snprintf(config, sizeof config, "{\"input\": \"%s\"}", path);
  EXPECT(mp_run_command("distance", config, &report, &csv) == MP_OK);
  EXPECT(report && strstr(report, "\"distance\": 1.4142135623730951"));
  EXPECT(csv == NULL);
  mp_string_free(report);
  EXPECT(mp_run_command("simulate", "{\"m\": 4, \"trials\": 3, \"n_grid\": [1]}", &report, &csv) ==
         MP_OK);
  EXPECT(csv && strncmp(csv, "n,point", 7) == 0);
  mp_string_free(report);
  mp_string_free(csv);
  EXPECT(mp_run_command("bogus", "{}", &report, &csv) == MP_UNKNOWN_COMMAND);
  EXPECT(report && strstr(report, "\"unknown-command\""));
  mp_string_free(report);
  EXPECT(mp_run_command("simulate", "{oops", &report, NULL) == MP_INVALID_CONFIG);
  mp_string_free(report);
  remove(path);

  mp_partition_free(x);
  mp_partition_free(y);
  mp_partition_free(mean);
  mp_partition_free(heur);
  mp_partition_free(expect_mid);
  mp_partition_free(got);
  mp_sample_free(s);
  mp_sample_free(loaded);

  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
