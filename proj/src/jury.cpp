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

#include "meanpart/jury.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "meanpart/error.hpp"
#include "meanpart/random.hpp"

namespace meanpart {
namespace {

// Stream tags for make_rng.
constexpr std::uint64_t kVoteStream = 0x766f7465ULL;
constexpr std::uint64_t kMeanPickStream = 0x6d65616eULL;
constexpr std::uint64_t kRestartStream = 0x72737472ULL;

LabeledPartition require_hard(LabeledPartition rep) {
  if (!rep.is_hard()) fail(ErrorCode::kInvalidArgument, "ground truth must be a hard partition");
  return rep;
}

void require_point(std::size_t j, std::size_t m) {
  if (j >= m)
    fail(ErrorCode::kIndexOutOfRange,
         "point " + std::to_string(j) + " outside [0, " + std::to_string(m) + ")");
}

}  // namespace

GroundTruth::GroundTruth(LabeledPartition fixed_rep)
    : fixed_rep_(require_hard(std::move(fixed_rep))), partition_(fixed_rep_) {}

GroundTruth GroundTruth::from_labels(std::span<const int> labels, std::size_t ell) {
  return GroundTruth(LabeledPartition::from_labels(labels, ell));
}

double agreement(const LabeledPartition& rep, const GroundTruth& truth, std::size_t j) {
  require_same_shape(rep, truth.fixed_rep());
  require_point(j, rep.m());
  double s = 0.0;
  for (std::size_t k = 0; k < rep.ell(); ++k) s += rep(k, j) * truth.fixed_rep()(k, j);
  return s;
}

std::vector<Permutation> optimal_positions(const Partition& x, const GroundTruth& truth,
                                           const VoteOptions& options) {
  require_same_shape(x.canonical(), truth.fixed_rep());
  const auto& target = truth.fixed_rep();
  const auto& moving = x.canonical();
  const std::size_t ell = target.ell();
  if (ell > options.ell_cap) {
    if (!options.allow_reduced)
      fail(ErrorCode::kEllTooLarge, "ell = " + std::to_string(ell) +
                                        " exceeds the enumeration cap of " +
                                        std::to_string(options.ell_cap));
    return {align(target, moving).permutation};
  }
  std::vector<double> profit(ell * ell, 0.0);
  for (std::size_t a = 0; a < ell; ++a)
    for (std::size_t b = 0; b < ell; ++b) {
      double dot = 0.0;
      const auto ra = target.row(a);
      const auto rb = moving.row(b);
      for (std::size_t j = 0; j < ra.size(); ++j) dot += ra[j] * rb[j];
      profit[a * ell + b] = dot;
    }
  return all_optimal_assignments(profit, ell);
}

std::vector<VoteOutcome> votes(const Partition& x, const GroundTruth& truth,
                               std::uint64_t seed, const VoteOptions& options) {
  const auto positions = optimal_positions(x, truth, options);
  Rng rng = make_rng(seed, {kVoteStream});
  const auto& perm = positions[uniform_index(rng, positions.size())];
  const LabeledPartition rep = x.canonical().permuted(perm);
  const bool reduced = truth.ell() > options.ell_cap;

  std::vector<VoteOutcome> out(rep.m());
  for (std::size_t j = 0; j < rep.m(); ++j) {
    const double k = agreement(rep, truth, j);
    out[j] = {j, k, k > 0.5 ? 1 : 0, reduced};
  }
  return out;
}

VoteOutcome vote(const Partition& x, const GroundTruth& truth, std::size_t j,
                 std::uint64_t seed, const VoteOptions& options) {
  require_point(j, truth.m());
  return votes(x, truth, seed, options)[j];
}

MajorityResult majority_votes(const Sample& sample, const GroundTruth& truth,
                              std::uint64_t seed, const MajorityOptions& options) {
  require_same_shape(sample[0].canonical(), truth.fixed_rep());
  MeanOptions mean_options = options.mean;
  mean_options.heuristic.seed = make_rng(seed, {kRestartStream})();
  auto set = compute_mean_set(sample, mean_options);

  Rng pick = make_rng(seed, {kMeanPickStream});
  const std::size_t chosen = uniform_index(pick, set.means.size());
  MajorityResult out{set.means[chosen], set.means.size(), set.exact, {}};
  out.votes = votes(out.mean, truth, seed, options.vote);
  return out;
}

VoteOutcome majority_vote(const Sample& sample, const GroundTruth& truth, std::size_t j,
                          std::uint64_t seed, const MajorityOptions& options) {
  require_point(j, truth.m());
  return majority_votes(sample, truth, seed, options).votes[j];
}

double binomial_majority_prob(std::size_t n, double p) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "binomial_majority_prob needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::kInvalidArgument, "p must lie in [0, 1]");
  const std::size_t r = n / 2 + 1;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;

  if (n <= 500) {
    // C(n, i) grows from C(n, r) by the ratio (n - i) / (i + 1).
    double binom = 1.0;
    for (std::size_t i = 0; i < r; ++i)
      binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
    double total = 0.0;
    for (std::size_t i = r; i <= n; ++i) {
      total += binom * std::pow(p, static_cast<double>(i)) *
               std::pow(1.0 - p, static_cast<double>(n - i));
      binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    return std::min(total, 1.0);
  }

  const double lp = std::log(p);
  const double lq = std::log1p(-p);
  const double ln = std::lgamma(static_cast<double>(n) + 1.0);
  std::vector<double> logs;
  logs.reserve(n - r + 1);
  for (std::size_t i = r; i <= n; ++i) {
    logs.push_back(ln - std::lgamma(static_cast<double>(i) + 1.0) -
                   std::lgamma(static_cast<double>(n - i) + 1.0) + static_cast<double>(i) * lp +
                   static_cast<double>(n - i) * lq);
  }
  const double peak = *std::max_element(logs.begin(), logs.end());
  double acc = 0.0;
  for (double l : logs) acc += std::exp(l - peak);
  return std::min(1.0, std::exp(peak + std::log(acc)));
}

double condorcet_limit(double p) {
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::kInvalidArgument, "p must lie in [0, 1]");
  if (p > 0.5) return 1.0;
  if (p < 0.5) return 0.0;
  return 0.5;
}

}  // namespace meanpart
