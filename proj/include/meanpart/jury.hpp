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
#include <vector>

#include "meanpart/alignment.hpp"
#include "meanpart/frechet.hpp"
#include "meanpart/partition.hpp"

namespace meanpart {

/// The hard ground-truth partition together with one fixed representative.
class GroundTruth {
 public:
  /// Uses `fixed_rep` itself as the fixed representative; must be hard.
  explicit GroundTruth(LabeledPartition fixed_rep);
  static GroundTruth from_labels(std::span<const int> labels, std::size_t ell);

  const Partition& partition() const noexcept { return partition_; }
  const LabeledPartition& fixed_rep() const noexcept { return fixed_rep_; }
  std::size_t ell() const noexcept { return fixed_rep_.ell(); }
  std::size_t m() const noexcept { return fixed_rep_.m(); }

 private:
  LabeledPartition fixed_rep_;
  Partition partition_;
};

struct VoteOutcome {
  std::size_t point_index = 0;
  double agreement = 0.0;
  int vote = 0;
  /// Set when ell exceeded the enumeration cap and only the tie-broken
  /// optimal position was used instead of a uniform draw.
  bool reduced_fidelity = false;
};

struct VoteOptions {
  /// Largest ell for which all optimal positions are enumerated.
  std::size_t ell_cap = 8;
  /// Beyond the cap: fall back to the tie-broken position (true) or throw
  /// Error(kEllTooLarge) (false).
  bool allow_reduced = true;
};

/// Inner product of column j of `rep` with column j of the fixed truth
/// representative.
double agreement(const LabeledPartition& rep, const GroundTruth& truth, std::size_t j);

/// All row permutations of x's canonical matrix that are in optimal position
/// with the truth representative, lexicographic order.
std::vector<Permutation> optimal_positions(const Partition& x, const GroundTruth& truth,
                                           const VoteOptions& options = {});

/// Votes at every point from one representative of x, drawn uniformly with
/// the seed among the representatives in optimal position with the truth.
/// A vote is 1 iff the agreement is strictly above 0.5.
std::vector<VoteOutcome> votes(const Partition& x, const GroundTruth& truth,
                               std::uint64_t seed, const VoteOptions& options = {});

VoteOutcome vote(const Partition& x, const GroundTruth& truth, std::size_t j,
                 std::uint64_t seed, const VoteOptions& options = {});

struct MajorityOptions {
  MeanOptions mean;
  VoteOptions vote;
};

struct MajorityResult {
  Partition mean;
  std::size_t mean_set_size = 1;
  bool exact = false;
  std::vector<VoteOutcome> votes;
};

/// Picks a mean partition of the sample uniformly from its mean set (exact
/// when affordable, multi-start heuristic otherwise) and returns its votes at
/// every point.
MajorityResult majority_votes(const Sample& sample, const GroundTruth& truth,
                              std::uint64_t seed, const MajorityOptions& options = {});

VoteOutcome majority_vote(const Sample& sample, const GroundTruth& truth, std::size_t j,
                          std::uint64_t seed, const MajorityOptions& options = {});

/// P(Bin(n, p) >= floor(n/2) + 1); accumulated in the log domain for n > 500.
double binomial_majority_prob(std::size_t n, double p);

/// Limit of the majority-correct probability as n grows: 1, 0 or 0.5.
double condorcet_limit(double p);

}  // namespace meanpart
