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

#include "meanpart/partition.hpp"

namespace meanpart {

/// An ordered, non-empty collection of partitions sharing ell and m.
class Sample {
 public:
  explicit Sample(std::vector<Partition> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t ell() const noexcept { return elements_.front().ell(); }
  std::size_t m() const noexcept { return elements_.front().m(); }
  const Partition& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<Partition>& elements() const noexcept { return elements_; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

 private:
  std::vector<Partition> elements_;
};

/// One concrete representative per sample element. permutations[i] maps the
/// canonical matrix of element i onto reps[i].
struct MultipleAlignment {
  std::vector<LabeledPartition> reps;
  std::vector<Permutation> permutations;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Checks that every rep is a row permutation of the matching sample element.
void validate_alignment(const Sample& sample, const MultipleAlignment& a);

/// Average pairwise squared Frobenius distance, (1/n^2) sum_i sum_j.
double alignment_cost(const MultipleAlignment& a);

/// Puts every sample element in optimal position with z_rep.
MultipleAlignment align_sample_to(const Sample& sample, const LabeledPartition& z_rep);

struct ExactAlignmentResult {
  MultipleAlignment alignment;  // lexicographically first minimizer
  double cost = 0.0;
  std::uint64_t minimizer_count = 0;  // optimal tuples with element 0 fixed
  std::uint64_t enumerated = 0;
  /// Distinct orbits of the minimizers' entrywise means, canonical order.
  std::vector<Partition> projected_means;
};

/// (ell!)^(n-1), saturating at UINT64_MAX.
std::uint64_t alignment_enumeration_count(std::size_t ell, std::size_t n);

/// Minimizes alignment_cost over all multiple alignments. Element 0 stays at
/// its canonical matrix (the cost is invariant under a common permutation),
/// and the remaining tuples are enumerated in lexicographic order of their
/// permutation sequences. Throws Error(kBudgetExceeded) if the enumeration is
/// larger than `budget`.
ExactAlignmentResult exact_optimal_alignment(const Sample& sample,
                                             std::uint64_t budget = kDefaultBudget,
                                             double dedup_tol = 1e-7);

}  // namespace meanpart
