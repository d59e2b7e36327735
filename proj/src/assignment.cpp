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

#include "meanpart/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "meanpart/error.hpp"

namespace meanpart {
namespace {

// Minimum-cost assignment via shortest augmenting paths with potentials.
// cost is n x n row-major; returns the column chosen for each row.
std::vector<std::size_t> hungarian_min(const std::vector<double>& cost,
                                       std::size_t n) {
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based internals; p[j] is the row matched to column j.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      double step = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < step) {
          step = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += step;
          v[j] -= step;
        } else {
          minv[j] -= step;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n, 0);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

// Optimal profit of the sub-problem restricted to the given rows and columns.
double residual_max_profit(std::span<const double> profit, std::size_t n,
                           const std::vector<std::size_t>& rows,
                           const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return 0.0;
  std::vector<double> cost(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      cost[a * k + b] = -profit[rows[a] * n + cols[b]];
  const auto sol = hungarian_min(cost, k);
  double total = 0.0;
  for (std::size_t a = 0; a < k; ++a) total += profit[rows[a] * n + cols[sol[a]]];
  return total;
}

void check_square(std::span<const double> profit, std::size_t n) {
  if (profit.size() != n * n)
    fail(ErrorCode::kDimensionMismatch, "profit matrix is not n x n");
}

}  // namespace

AssignmentSolution max_profit_assignment(std::span<const double> profit,
                                         std::size_t n, double tie_tol) {
  check_square(profit, n);
  AssignmentSolution out;
  if (n == 0) return out;

  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  const double best = residual_max_profit(profit, n, all, all);
  const double tol = tie_tol * std::max(1.0, std::abs(best));

  // Fix rows in order, always taking the smallest column that still admits
  // an optimal completion.
  std::vector<std::size_t> free_cols = all;
  double fixed = 0.0;
  out.assignment.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<std::size_t> rest_rows(all.begin() + static_cast<std::ptrdiff_t>(a) + 1,
                                       all.end());
    bool placed = false;
    for (std::size_t idx = 0; idx < free_cols.size(); ++idx) {
      const std::size_t b = free_cols[idx];
      std::vector<std::size_t> rest_cols = free_cols;
      rest_cols.erase(rest_cols.begin() + static_cast<std::ptrdiff_t>(idx));
      const double here = profit[a * n + b];
      const double value =
          fixed + here + residual_max_profit(profit, n, rest_rows, rest_cols);
      if (value >= best - tol) {
        out.assignment[a] = b;
        fixed += here;
        free_cols = std::move(rest_cols);
        placed = true;
        break;
      }
    }
    if (!placed) fail(ErrorCode::kInternal, "assignment tie-break lost the optimum");
  }
  out.profit = fixed;
  return out;
}

std::vector<Permutation> all_optimal_assignments(std::span<const double> profit,
                                                 std::size_t n, double tie_tol) {
  check_square(profit, n);
  std::vector<Permutation> optimal;
  Permutation perm = identity_permutation(n);
  if (n == 0) {
    optimal.push_back(perm);
    return optimal;
  }
  const double best = max_profit_assignment(profit, n, tie_tol).profit;
  const double tol = tie_tol * std::max(1.0, std::abs(best));
  do {
    double total = 0.0;
    for (std::size_t a = 0; a < n; ++a) total += profit[a * n + perm[a]];
    if (total >= best - tol) optimal.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return optimal;
}

bool is_permutation_of_range(std::span<const std::size_t> perm) {
  std::vector<char> seen(perm.size(), 0);
  for (std::size_t v : perm) {
    if (v >= perm.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::size_t factorial_capped(std::size_t n, std::size_t cap) {
  std::size_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    if (f > cap / k) return cap;
    f *= k;
  }
  return std::min(f, cap);
}

}  // namespace meanpart
