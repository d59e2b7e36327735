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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "meanpart/alignment.hpp"
#include "meanpart/partition.hpp"

namespace meanpart {

struct MeanResult {
  Partition mean;
  double frechet_value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  /// Size of the deduplicated mean set; exact mode only.
  std::optional<std::size_t> minimizer_count;
  /// Frechet value after each iteration (heuristic mode).
  std::vector<double> trace;
};

/// (1/n) sum_i delta(X_i, z)^2.
double frechet(const Sample& sample, const Partition& z);

/// Largest entrywise gap between `mean_rep` and the average of the sample
/// representatives placed in optimal position with it. Zero at a fixed point
/// of the alternating scheme.
double fixed_point_residual(const Sample& sample, const LabeledPartition& mean_rep);

/// Alternates between aligning every element to the current estimate and
/// replacing the estimate by the entrywise average of the aligned
/// representatives. Stops at a fixed point (converged == true), when the
/// Frechet value drops by less than `tol`, or after `max_iter` rounds.
MeanResult mean_heuristic(const Sample& sample, const Partition& init,
                          std::size_t max_iter = 100, double tol = 1e-9);

struct HeuristicOptions {
  std::size_t max_iter = 100;
  double tol = 1e-9;
  /// 0 selects min(n, 8).
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
};

/// Index of the sample element with the smallest Frechet value (first on ties).
std::size_t best_medoid(const Sample& sample);

/// Runs mean_heuristic from the best medoid and from restarts - 1 further
/// distinct sample elements chosen with the seed; keeps the lowest Frechet
/// value (canonical order breaks ties).
MeanResult mean_multistart(const Sample& sample, const HeuristicOptions& options = {});

/// Exhaustive search: enumerates every multiple alignment, projects the
/// means of the minimizers and returns the canonically smallest of them.
MeanResult mean_exact(const Sample& sample, std::uint64_t budget = kDefaultBudget);

/// The deduplicated projected means of all optimal multiple alignments.
std::vector<Partition> mean_set(const Sample& sample, std::uint64_t budget = kDefaultBudget);

enum class MeanMethod { kAuto, kExact, kHeuristic };

struct MeanOptions {
  MeanMethod method = MeanMethod::kAuto;
  std::uint64_t budget = kDefaultBudget;
  HeuristicOptions heuristic;
};

struct MeanSetResult {
  std::vector<Partition> means;  // canonical order
  bool exact = false;
  MeanResult best;
};

/// Exact mean set when the enumeration fits the budget (or kExact is
/// requested), otherwise the multi-start heuristic mean as a singleton.
MeanSetResult compute_mean_set(const Sample& sample, const MeanOptions& options);

}  // namespace meanpart
