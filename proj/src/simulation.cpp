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

#include "meanpart/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <thread>

#include "meanpart/error.hpp"

namespace meanpart {
namespace {

constexpr std::uint64_t kTrialStream = 0x747269616cULL;
constexpr std::uint64_t kEstimateStream = 0x657374ULL;

struct TrialOutcome {
  std::vector<std::uint8_t> majority;     // per point
  std::vector<std::uint32_t> individual;  // per point, correct sample votes
  std::uint64_t proposals = 0;
  bool recovered = false;
  bool mean_in_ball = false;
  bool exact = false;
  bool singleton = false;
};

TrialOutcome run_trial(const EnsembleModel& model, std::size_t n, Rng& rng,
                       const MajorityOptions& options) {
  const std::size_t m = model.truth.m();
  TrialOutcome out;
  out.individual.assign(m, 0);
  std::vector<Partition> parts;
  parts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto d = draw_partition(model, rng);
    out.proposals += d.proposals;
    const auto v = votes(d.partition, model.truth, rng(), options.vote);
    for (std::size_t j = 0; j < m; ++j) out.individual[j] += static_cast<std::uint32_t>(v[j].vote);
    parts.push_back(std::move(d.partition));
  }
  const Sample sample(std::move(parts));
  const auto maj = majority_votes(sample, model.truth, rng(), options);
  out.majority.resize(m);
  for (std::size_t j = 0; j < m; ++j) out.majority[j] = static_cast<std::uint8_t>(maj.votes[j].vote);
  // Both sides are hard after rounding, so the comparison is exact.
  out.recovered = delta(round_to_hard(maj.mean), model.truth.partition()).distance == 0.0;
  if (model.mode == SamplingMode::kBallRejection)
    out.mean_in_ball = in_asymmetry_ball(maj.mean, ball_center(model), false);
  out.exact = maj.exact;
  out.singleton = maj.mean_set_size == 1;
  return out;
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(count, 1));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += threads) fn(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double binomial_stderr(double rate, std::size_t trials) {
  return std::sqrt(rate * (1.0 - rate) / static_cast<double>(trials));
}

}  // namespace

std::string_view sampling_mode_name(SamplingMode mode) noexcept {
  return mode == SamplingMode::kBallRejection ? "ball" : "unconstrained";
}

SamplingMode parse_sampling_mode(std::string_view name) {
  if (name == "unconstrained") return SamplingMode::kUnconstrained;
  if (name == "ball" || name == "ball-rejection") return SamplingMode::kBallRejection;
  fail(ErrorCode::kInvalidConfig, "unknown sampling mode '" + std::string(name) + "'");
}

EnsembleModel make_model(GroundTruth truth, std::vector<double> correct_prob, SamplingMode mode,
                         std::optional<Partition> center, std::size_t max_retries) {
  const std::size_t m = truth.m();
  if (correct_prob.size() == 1) correct_prob.assign(m, correct_prob.front());
  if (correct_prob.size() != m)
    fail(ErrorCode::kDimensionMismatch, "need one correctness probability per point");
  for (double p : correct_prob)
    if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::kInvalidArgument, "probability outside [0, 1]");
  if (max_retries == 0) fail(ErrorCode::kInvalidArgument, "max_retries must be positive");
  if (center) require_same_shape(truth.partition(), *center);
  EnsembleModel model{std::move(truth), std::move(correct_prob), mode, std::move(center),
                      max_retries};
  if (mode == SamplingMode::kBallRejection && degree_of_asymmetry(ball_center(model)) == 0.0)
    fail(ErrorCode::kSymmetricCenter, "ball-rejection needs an asymmetric center");
  return model;
}

const Partition& ball_center(const EnsembleModel& model) {
  return model.ball_center ? *model.ball_center : model.truth.partition();
}

Draw draw_partition(const EnsembleModel& model, Rng& rng) {
  const auto truth_labels = model.truth.fixed_rep().labels();
  const std::size_t ell = model.truth.ell();
  const std::size_t m = truth_labels.size();
  std::vector<int> labels(m);
  for (std::size_t attempt = 1; attempt <= model.max_retries; ++attempt) {
    for (std::size_t j = 0; j < m; ++j) {
      labels[j] = truth_labels[j];
      if (ell > 1 && !(uniform01(rng) < model.correct_prob[j])) {
        const auto other = static_cast<int>(uniform_index(rng, ell - 1));
        labels[j] = other < truth_labels[j] ? other : other + 1;
      }
    }
    Partition p(LabeledPartition::from_labels(labels, ell));
    if (model.mode == SamplingMode::kUnconstrained ||
        in_asymmetry_ball(p, ball_center(model), true))
      return {std::move(p), attempt};
  }
  fail(ErrorCode::kRejectionExhausted,
       "no sample inside the asymmetry ball after " + std::to_string(model.max_retries) +
           " proposals");
}

VoteEstimate estimate_vote_probability(const EnsembleModel& model, std::size_t n,
                                       std::size_t trials, std::size_t j, std::uint64_t seed,
                                       const MajorityOptions& options) {
  if (n == 0 || trials == 0) fail(ErrorCode::kInvalidArgument, "n and trials must be positive");
  if (j >= model.truth.m()) fail(ErrorCode::kIndexOutOfRange, "point index out of range");
  std::size_t correct = 0;
  std::uint64_t individual = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = make_rng(seed, {kEstimateStream, n, t});
    const auto out = run_trial(model, n, rng, options);
    correct += out.majority[j];
    individual += out.individual[j];
  }
  VoteEstimate est;
  est.trials = trials;
  est.rate = static_cast<double>(correct) / static_cast<double>(trials);
  est.stderr_ = binomial_stderr(est.rate, trials);
  est.p_hat = static_cast<double>(individual) / static_cast<double>(trials * n);
  return est;
}

ExperimentReport run_convergence_experiment(const EnsembleModel& model,
                                            const ExperimentConfig& config) {
  if (config.n_grid.empty()) fail(ErrorCode::kInvalidArgument, "empty n grid");
  if (config.trials == 0) fail(ErrorCode::kInvalidArgument, "trials must be positive");
  for (std::size_t n : config.n_grid)
    if (n == 0) fail(ErrorCode::kInvalidArgument, "sample sizes must be positive");

  const std::size_t m = model.truth.m();
  ExperimentReport report;
  report.n_grid = config.n_grid;
  report.trials = config.trials;
  report.seed = config.seed;
  report.mode = model.mode;
  report.ell = model.truth.ell();
  report.m = m;
  report.nominal_p = model.correct_prob;
  report.low_trials = config.trials < 100;

  std::vector<std::uint64_t> individual_total(m, 0);
  std::uint64_t drawn = 0;
  std::vector<std::vector<TrialOutcome>> per_grid;
  for (std::size_t n : config.n_grid) {
    std::vector<TrialOutcome> outcomes(config.trials);
    parallel_for(config.trials, config.threads, [&](std::size_t t) {
      Rng rng = make_rng(config.seed, {kTrialStream, n, t});
      outcomes[t] = run_trial(model, n, rng, config.majority);
    });
    for (const auto& o : outcomes) {
      for (std::size_t j = 0; j < m; ++j) individual_total[j] += o.individual[j];
      report.proposals += o.proposals;
    }
    drawn += static_cast<std::uint64_t>(n) * config.trials;
    per_grid.push_back(std::move(outcomes));
  }
  report.partitions_drawn = drawn;
  report.p_hat.resize(m);
  for (std::size_t j = 0; j < m; ++j)
    report.p_hat[j] = static_cast<double>(individual_total[j]) / static_cast<double>(drawn);

  const double inv_trials = 1.0 / static_cast<double>(config.trials);
  for (std::size_t g = 0; g < config.n_grid.size(); ++g) {
    const std::size_t n = config.n_grid[g];
    const auto& outcomes = per_grid[g];
    GridPointResult res;
    res.n = n;
    res.even_n = n % 2 == 0;
    res.rate.assign(m, 0.0);
    std::vector<double> trial_avg(config.trials, 0.0);
    std::size_t recovered = 0, in_ball = 0, singletons = 0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const auto& o = outcomes[t];
      for (std::size_t j = 0; j < m; ++j) {
        res.rate[j] += o.majority[j];
        trial_avg[t] += o.majority[j];
      }
      trial_avg[t] /= static_cast<double>(m);
      recovered += o.recovered;
      in_ball += o.mean_in_ball;
      if (o.exact) {
        ++res.exact_trials;
        singletons += o.singleton;
      }
    }
    res.rate_stderr.resize(m);
    res.binomial_ref.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
      res.rate[j] *= inv_trials;
      res.rate_stderr[j] = binomial_stderr(res.rate[j], config.trials);
      res.binomial_ref[j] = binomial_majority_prob(n, report.p_hat[j]);
    }
    double mean = 0.0;
    for (double a : trial_avg) mean += a;
    mean *= inv_trials;
    double var = 0.0;
    for (double a : trial_avg) var += (a - mean) * (a - mean);
    const double denom = config.trials > 1 ? static_cast<double>(config.trials - 1) : 1.0;
    res.pooled_rate = mean;
    res.pooled_stderr = std::sqrt(var / denom * inv_trials);
    double ref = 0.0;
    for (double r : res.binomial_ref) ref += r;
    res.pooled_ref = ref / static_cast<double>(m);
    res.recovery_rate = static_cast<double>(recovered) * inv_trials;
    res.recovery_stderr = binomial_stderr(res.recovery_rate, config.trials);
    if (model.mode == SamplingMode::kBallRejection)
      res.mean_in_ball_rate = static_cast<double>(in_ball) * inv_trials;
    res.singleton_mean_set_rate =
        res.exact_trials ? static_cast<double>(singletons) / static_cast<double>(res.exact_trials)
                         : 0.0;
    report.grid.push_back(std::move(res));
  }
  return report;
}

}  // namespace meanpart
