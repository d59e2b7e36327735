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

#include "meanpart/meanpart.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "meanpart/command.hpp"
#include "meanpart/diversity.hpp"
#include "meanpart/error.hpp"
#include "meanpart/io.hpp"
#include "meanpart/report.hpp"

struct mp_partition {
  meanpart::Partition value;
};

struct mp_sample {
  std::vector<meanpart::Partition> items;
};

namespace {

thread_local std::string last_error;

mp_status set_error(mp_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
mp_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    fn();
    return MP_OK;
  } catch (const meanpart::Error& e) {
    return set_error(static_cast<mp_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MP_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MP_INTERNAL, e.what());
  } catch (...) {
    return set_error(MP_INTERNAL, "unknown failure");
  }
}

void require(bool ok, const char* what) {
  if (!ok) meanpart::fail(meanpart::ErrorCode::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

meanpart::Sample to_sample(const mp_sample* s) {
  require(s != nullptr, "null sample");
  return meanpart::Sample(s->items);
}

}  // namespace

extern "C" {

const char* mp_version(void) { return meanpart::kVersion; }

const char* mp_status_name(mp_status status) {
  if (status == MP_OK) return "ok";
  if (status == MP_OUT_OF_MEMORY) return "out-of-memory";
  if (status < MP_OK || status > MP_OUT_OF_MEMORY) return "unknown";
  return meanpart::error_code_name(static_cast<meanpart::ErrorCode>(status)).data();
}

const char* mp_last_error_message(void) { return last_error.c_str(); }

mp_status mp_partition_from_labels(const int* labels, size_t m, size_t ell, mp_partition** out) {
  return guarded([&] {
    require(out != nullptr && (labels != nullptr || m == 0), "null pointer");
    *out = nullptr;
    auto rep = meanpart::LabeledPartition::from_labels({labels, m}, ell);
    *out = new mp_partition{meanpart::Partition(rep)};
  });
}

mp_status mp_partition_from_matrix(const double* entries, size_t ell, size_t m,
                                   mp_partition** out) {
  return guarded([&] {
    require(out != nullptr && entries != nullptr, "null pointer");
    *out = nullptr;
    meanpart::LabeledPartition rep(ell, m, std::vector<double>(entries, entries + ell * m));
    *out = new mp_partition{meanpart::Partition(rep)};
  });
}

void mp_partition_free(mp_partition* p) { delete p; }

size_t mp_partition_ell(const mp_partition* p) { return p ? p->value.ell() : 0; }
size_t mp_partition_m(const mp_partition* p) { return p ? p->value.m() : 0; }
int mp_partition_is_hard(const mp_partition* p) { return p && p->value.is_hard() ? 1 : 0; }

mp_status mp_partition_copy_canonical(const mp_partition* p, double* out, size_t len) {
  return guarded([&] {
    require(p != nullptr && out != nullptr, "null pointer");
    const auto e = p->value.canonical().entries();
    if (len < e.size())
      meanpart::fail(meanpart::ErrorCode::kDimensionMismatch, "output buffer too small");
    std::copy(e.begin(), e.end(), out);
  });
}

mp_status mp_partition_equal(const mp_partition* a, const mp_partition* b, double tol, int* out) {
  return guarded([&] {
    require(a && b && out, "null pointer");
    require(tol >= 0.0, "negative tolerance");
    meanpart::require_same_shape(a->value, b->value);
    *out = meanpart::equal(a->value, b->value, tol) ? 1 : 0;
  });
}

mp_status mp_sample_create(mp_sample** out) {
  return guarded([&] {
    require(out != nullptr, "null pointer");
    *out = new mp_sample{};
  });
}

mp_status mp_sample_append(mp_sample* s, const mp_partition* p) {
  return guarded([&] {
    require(s && p, "null pointer");
    if (!s->items.empty()) meanpart::require_same_shape(s->items.front(), p->value);
    s->items.push_back(p->value);
  });
}

mp_status mp_sample_load(const char* path, size_t ell, mp_sample** out) {
  return guarded([&] {
    require(path && out, "null pointer");
    *out = nullptr;
    std::optional<std::size_t> e;
    if (ell) e = ell;
    auto sample = meanpart::load_sample(path, e);
    *out = new mp_sample{sample.elements()};
  });
}

mp_status mp_sample_save_labels(const mp_sample* s, const char* path) {
  return guarded([&] {
    require(path != nullptr, "null pointer");
    meanpart::write_label_file(path, to_sample(s));
  });
}

size_t mp_sample_size(const mp_sample* s) { return s ? s->items.size() : 0; }

mp_status mp_sample_get(const mp_sample* s, size_t index, mp_partition** out) {
  return guarded([&] {
    require(s && out, "null pointer");
    *out = nullptr;
    if (index >= s->items.size())
      meanpart::fail(meanpart::ErrorCode::kIndexOutOfRange, "sample index out of range");
    *out = new mp_partition{s->items[index]};
  });
}

void mp_sample_free(mp_sample* s) { delete s; }

mp_status mp_distance(const mp_partition* x, const mp_partition* y, double* out, size_t* perm) {
  return guarded([&] {
    require(x && y && out, "null pointer");
    const auto r = meanpart::delta(x->value, y->value);
    *out = r.distance;
    if (perm) std::copy(r.permutation.begin(), r.permutation.end(), perm);
  });
}

mp_status mp_degree_of_asymmetry(const mp_partition* z, double* out) {
  return guarded([&] {
    require(z && out, "null pointer");
    *out = meanpart::degree_of_asymmetry(z->value);
  });
}

mp_status mp_in_asymmetry_ball(const mp_partition* x, const mp_partition* z, int strict,
                               int* out) {
  return guarded([&] {
    require(x && z && out, "null pointer");
    *out = meanpart::in_asymmetry_ball(x->value, z->value, strict != 0) ? 1 : 0;
  });
}

mp_status mp_frechet(const mp_sample* s, const mp_partition* z, double* out) {
  return guarded([&] {
    require(z && out, "null pointer");
    *out = meanpart::frechet(to_sample(s), z->value);
  });
}

void mp_mean_options_default(mp_mean_options* options) {
  if (!options) return;
  const meanpart::MeanOptions d;
  options->method = MP_MEAN_AUTO;
  options->budget = d.budget;
  options->max_iter = d.heuristic.max_iter;
  options->tol = d.heuristic.tol;
  options->restarts = d.heuristic.restarts;
  options->seed = d.heuristic.seed;
}

mp_status mp_mean(const mp_sample* s, const mp_mean_options* options, mp_partition** out,
                  mp_mean_info* info) {
  return guarded([&] {
    require(out != nullptr, "null pointer");
    *out = nullptr;
    mp_mean_options o;
    mp_mean_options_default(&o);
    if (options) o = *options;
    meanpart::MeanOptions mo;
    switch (o.method) {
      case MP_MEAN_AUTO: mo.method = meanpart::MeanMethod::kAuto; break;
      case MP_MEAN_EXACT: mo.method = meanpart::MeanMethod::kExact; break;
      case MP_MEAN_HEURISTIC: mo.method = meanpart::MeanMethod::kHeuristic; break;
      default: require(false, "unknown mean method");
    }
    require(o.budget > 0 && o.max_iter > 0 && o.tol >= 0.0, "invalid mean options");
    mo.budget = o.budget;
    mo.heuristic = {o.max_iter, o.tol, o.restarts, o.seed};
    auto set = meanpart::compute_mean_set(to_sample(s), mo);
    if (info) {
      info->frechet_value = set.best.frechet_value;
      info->iterations = set.best.iterations;
      info->converged = set.best.converged ? 1 : 0;
      info->exact = set.exact ? 1 : 0;
      info->mean_set_size = set.means.size();
    }
    *out = new mp_partition{std::move(set.best.mean)};
  });
}

mp_status mp_binomial_majority_prob(size_t n, double p, double* out) {
  return guarded([&] {
    require(out != nullptr, "null pointer");
    *out = meanpart::binomial_majority_prob(n, p);
  });
}

mp_status mp_condorcet_limit(double p, double* out) {
  return guarded([&] {
    require(out != nullptr, "null pointer");
    *out = meanpart::condorcet_limit(p);
  });
}

mp_status mp_run_command(const char* command, const char* config_json, char** report,
                         char** csv) {
  if (report) *report = nullptr;
  if (csv) *csv = nullptr;
  const mp_status st = guarded([&] {
    require(command && config_json && report, "null pointer");
    nlohmann::json config;
    try {
      config = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      meanpart::fail(meanpart::ErrorCode::kInvalidConfig, std::string("config: ") + e.what());
    }
    auto out = meanpart::run_command(command, config);
    *report = dup_string(meanpart::render_json(out.report));
    if (csv && !out.csv.empty()) *csv = dup_string(out.csv);
  });
  if (st != MP_OK && st != MP_OUT_OF_MEMORY && report && !*report) {
    const std::string message = last_error;
    const auto code = static_cast<meanpart::ErrorCode>(st);
    try {
      *report = dup_string(meanpart::render_json(meanpart::error_json(code, message)));
    } catch (...) {
    }
  }
  return st;
}

void mp_string_free(char* s) { std::free(s); }

}  // extern "C"
