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
#include <span>
#include <vector>

namespace meanpart {

// perm[a] is the column assigned to row a.
using Permutation = std::vector<std::size_t>;

struct AssignmentSolution {
  Permutation assignment;
  double profit = 0.0;
};

/// Maximum-profit linear assignment on a square row-major profit matrix.
///
/// Among all assignments whose profit is within `tie_tol` of the optimum the
/// lexicographically smallest assignment sequence is returned. The optimum is
/// found with the O(n^3) shortest augmenting path method; the tie-break fixes
/// rows one at a time and re-solves the residual problem, so the overall cost
/// is O(n^5) in the worst case. Intended for n up to a few dozen.
AssignmentSolution max_profit_assignment(std::span<const double> profit,
                                         std::size_t n,
                                         double tie_tol = 1e-9);

/// Every assignment whose profit is within `tie_tol` of the optimum, in
/// lexicographic order. Enumerates all n! permutations; callers bound n.
std::vector<Permutation> all_optimal_assignments(std::span<const double> profit,
                                                 std::size_t n,
                                                 double tie_tol = 1e-9);

bool is_permutation_of_range(std::span<const std::size_t> perm);

Permutation identity_permutation(std::size_t n);

// n! saturated at `cap`.
std::size_t factorial_capped(std::size_t n, std::size_t cap);

}  // namespace meanpart
