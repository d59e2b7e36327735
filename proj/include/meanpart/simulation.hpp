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
#include <string>
#include <vector>

#include "meanpart/jury.hpp"
#include "meanpart/random.hpp"

namespace meanpart {

enum class SamplingMode {
  kUnconstrained,   // independent per-point flips
  kBallRejection,   // flips, resampled until inside the open asymmetry ball
};

std::string_view sampling_mode_name(SamplingMode mode) noexcept;
SamplingMode parse_sampling_mode(std::string_view name);

/// Flip-noise generative model around a hard ground truth: point j keeps its
/// true cluster with probability correct_prob[j] and otherwise moves to one
/// of the other ell - 1 clusters uniformly.
struct EnsembleModel {
  GroundTruth truth;
  std::vector<double> correct_prob;  // one entry per point
  SamplingMode mode = SamplingMode::kUnconstrained;
  std::optional<Partition> ball_center;  // defaults to the truth
  std::size_t max_retries = 10'000;
};

/// Builds a model, broadcasting a single probability to every point, and
/// validates it (probabilities in [0, 1], asymmetric center in ball mode).
EnsembleModel make_model(GroundTruth truth, std::vector<double> correct_prob,
                         SamplingMode mode = SamplingMode::kUnconstrained,
                         std::optional<Partition> ball_center = {},
                         std::size_t max_retries = 10'000);

const Partition& ball_center(const EnsembleModel& model);

struct Draw {
  Partition partition;
  std::size_t proposals = 1;
};

/// One hard sample partition. Throws Error(kRejectionExhausted) when ball
/// mode fails to accept within max_retries proposals.
Draw draw_partition(const EnsembleModel& model, Rng& rng);

inline Partition sample_partition(const EnsembleModel& model, Rng& rng) {
  return draw_partition(model, rng).partition;
}

struct VoteEstimate {
  double rate = 0.0;
  double stderr_ = 0.0;
  double p_hat = 0.0;  // vote rate of individual sample partitions at j
  std::size_t trials = 0;
};

/// Monte Carlo estimate of P(majority vote at j is correct) for samples of
/// size n.
VoteEstimate estimate_vote_probability(const EnsembleModel& model, std::size_t n,
                                       std::size_t trials, std::size_t j, std::uint64_t seed,
                                       const MajorityOptions& options = {});

struct ExperimentConfig {
  std::vector<std::size_t> n_grid;
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  MajorityOptions majority;
  /// 0 picks the hardware concurrency. Results do not depend on it.
  std::size_t threads = 0;
};

struct GridPointResult {
  std::size_t n = 0;
  std::vector<double> rate;          // per point
  std::vector<double> rate_stderr;   // per point, binomial
  std::vector<double> binomial_ref;  // binomial_majority_prob(n, p_hat[j])
  double pooled_rate = 0.0;          // average over points
  double pooled_stderr = 0.0;        // from per-trial point averages
  double pooled_ref = 0.0;
  double recovery_rate = 0.0;        // hardened mean equals the truth
  double recovery_stderr = 0.0;
  std::optional<double> mean_in_ball_rate;  // ball mode only
  std::size_t exact_trials = 0;             // mean set enumerated exactly
  double singleton_mean_set_rate = 0.0;     // among exact trials
  bool even_n = false;
};

struct ExperimentReport {
  std::vector<std::size_t> n_grid;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  SamplingMode mode = SamplingMode::kUnconstrained;
  std::size_t ell = 0;
  std::size_t m = 0;
  std::vector<double> nominal_p;
  std::vector<double> p_hat;  // per-partition vote rate, pooled over the run
  std::uint64_t partitions_drawn = 0;
  std::uint64_t proposals = 0;
  bool low_trials = false;  // fewer than 100 trials per grid point
  std::vector<GridPointResult> grid;
};

inline constexpr const char* kNoiseModelDescription =
    "flip-noise: each point keeps its true cluster with probability p_j, otherwise it moves "
    "to one of the other clusters uniformly at random";

/// For each n in the grid runs `trials` independent repetitions, each with
/// its own generator derived from (seed, n, trial index), so the report is
/// bit-identical for any thread count.
ExperimentReport run_convergence_experiment(const EnsembleModel& model,
                                            const ExperimentConfig& config);

}  // namespace meanpart
