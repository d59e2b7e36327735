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

#include "meanpart/frechet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "meanpart/error.hpp"
#include "meanpart/random.hpp"

namespace meanpart {
namespace {

double mean_squared_distance(const MultipleAlignment& a, const LabeledPartition& center) {
  double s = 0.0;
  for (const auto& r : a.reps) s += squared_distance(r, center);
  return s / static_cast<double>(a.reps.size());
}

bool better(const MeanResult& a, const MeanResult& b) {
  if (a.frechet_value < b.frechet_value - 1e-12) return true;
  if (b.frechet_value < a.frechet_value - 1e-12) return false;
  return canonical_less(a.mean, b.mean);
}

}  // namespace

double frechet(const Sample& sample, const Partition& z) {
  require_same_shape(sample[0], z);
  double s = 0.0;
  for (const auto& x : sample) {
    const double d = delta(x, z).distance;
    s += d * d;
  }
  return s / static_cast<double>(sample.size());
}

double fixed_point_residual(const Sample& sample, const LabeledPartition& mean_rep) {
  const auto aligned = align_sample_to(sample, mean_rep);
  return max_abs_difference(average(aligned.reps), mean_rep);
}

MeanResult mean_heuristic(const Sample& sample, const Partition& init, std::size_t max_iter,
                          double tol) {
  require_same_shape(sample[0], init);
  if (max_iter == 0) fail(ErrorCode::kInvalidArgument, "max_iter must be at least 1");

  LabeledPartition current = init.canonical();
  MultipleAlignment aligned = align_sample_to(sample, current);
  double value = mean_squared_distance(aligned, current);

  MeanResult out{init, value, 0, false, std::nullopt, {value}};
  for (std::size_t it = 1; it <= max_iter; ++it) {
    current = average(aligned.reps);
    aligned = align_sample_to(sample, current);
    const double next_value = mean_squared_distance(aligned, current);
    out.trace.push_back(next_value);
    out.iterations = it;
    const double residual = max_abs_difference(average(aligned.reps), current);
    const double drop = value - next_value;
    value = next_value;
    if (residual <= kTolerance) {
      out.converged = true;
      break;
    }
    if (drop < tol) break;  // stalled on a tie without reaching a fixed point
  }
  out.mean = Partition(current);
  out.frechet_value = value;
  return out;
}

std::size_t best_medoid(const Sample& sample) {
  const std::size_t n = sample.size();
  std::vector<double> totals(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = delta(sample[i], sample[j]).distance;
      totals[i] += d * d;
      totals[j] += d * d;
    }
  }
  return static_cast<std::size_t>(std::min_element(totals.begin(), totals.end()) -
                                  totals.begin());
}

MeanResult mean_multistart(const Sample& sample, const HeuristicOptions& options) {
  const std::size_t n = sample.size();
  const std::size_t restarts =
      std::min(n, options.restarts == 0 ? std::min<std::size_t>(n, 8) : options.restarts);
  const std::size_t medoid = best_medoid(sample);

  std::vector<std::size_t> starts{medoid};
  std::vector<std::size_t> others;
  for (std::size_t i = 0; i < n; ++i)
    if (i != medoid) others.push_back(i);
  Rng rng = make_rng(options.seed, {0x6d756c7469ULL});
  for (std::size_t r = 1; r < restarts; ++r) {
    const std::size_t pick = r - 1 + uniform_index(rng, others.size() - (r - 1));
    std::swap(others[r - 1], others[pick]);
    starts.push_back(others[r - 1]);
  }

  MeanResult best = mean_heuristic(sample, sample[starts[0]], options.max_iter, options.tol);
  for (std::size_t r = 1; r < starts.size(); ++r) {
    MeanResult cand = mean_heuristic(sample, sample[starts[r]], options.max_iter, options.tol);
    if (better(cand, best)) best = std::move(cand);
  }
  return best;
}

MeanResult mean_exact(const Sample& sample, std::uint64_t budget) {
  auto res = exact_optimal_alignment(sample, budget);
  MeanResult out{res.projected_means.front(), 0.0, 0, true, res.projected_means.size(), {}};
  out.frechet_value = frechet(sample, out.mean);
  return out;
}

std::vector<Partition> mean_set(const Sample& sample, std::uint64_t budget) {
  return exact_optimal_alignment(sample, budget).projected_means;
}

MeanSetResult compute_mean_set(const Sample& sample, const MeanOptions& options) {
  const bool exact =
      options.method == MeanMethod::kExact ||
      (options.method == MeanMethod::kAuto &&
       alignment_enumeration_count(sample.ell(), sample.size()) <= options.budget);
  if (exact) {
    auto res = exact_optimal_alignment(sample, options.budget);
    MeanResult best{res.projected_means.front(), 0.0, 0, true, res.projected_means.size(), {}};
    best.frechet_value = frechet(sample, best.mean);
    return {std::move(res.projected_means), true, std::move(best)};
  }
  MeanResult best = mean_multistart(sample, options.heuristic);
  return {{best.mean}, false, std::move(best)};
}

}  // namespace meanpart
