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

#include "meanpart/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "meanpart/error.hpp"

namespace meanpart {
namespace {

bool detect_hard(const std::vector<double>& data) {
  return std::all_of(data.begin(), data.end(),
                     [](double v) { return v == 0.0 || v == 1.0; });
}

}  // namespace

LabeledPartition::LabeledPartition(std::size_t ell, std::size_t m,
                                   std::vector<double> row_major)
    : ell_(ell), m_(m), data_(std::move(row_major)), hard_(false) {
  if (ell_ == 0 || m_ == 0)
    fail(ErrorCode::kInvalidMatrix, "partition needs ell >= 1 and m >= 1");
  if (data_.size() != ell_ * m_)
    fail(ErrorCode::kInvalidMatrix,
         "expected " + std::to_string(ell_ * m_) + " entries, got " +
             std::to_string(data_.size()));
  for (double v : data_) {
    if (!(v >= 0.0 && v <= 1.0))
      fail(ErrorCode::kInvalidMatrix, "membership value outside [0, 1]");
  }
  for (std::size_t j = 0; j < m_; ++j) {
    double sum = 0.0;
    for (std::size_t k = 0; k < ell_; ++k) sum += data_[k * m_ + j];
    if (std::abs(sum - 1.0) > kTolerance)
      fail(ErrorCode::kInvalidMatrix,
           "column " + std::to_string(j) + " sums to " + std::to_string(sum));
  }
  hard_ = detect_hard(data_);
}

LabeledPartition::LabeledPartition(Unchecked, std::size_t ell, std::size_t m,
                                   std::vector<double> data, bool hard)
    : ell_(ell), m_(m), data_(std::move(data)), hard_(hard) {}

LabeledPartition LabeledPartition::from_labels(std::span<const int> labels,
                                               std::size_t ell) {
  if (ell == 0 || labels.empty())
    fail(ErrorCode::kInvalidMatrix, "partition needs ell >= 1 and m >= 1");
  const std::size_t m = labels.size();
  std::vector<double> data(ell * m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    const int k = labels[j];
    if (k < 0 || static_cast<std::size_t>(k) >= ell)
      fail(ErrorCode::kLabelOutOfRange, "label " + std::to_string(k) +
                                            " at point " + std::to_string(j) +
                                            " outside [0, " + std::to_string(ell) + ")");
    data[static_cast<std::size_t>(k) * m + j] = 1.0;
  }
  return LabeledPartition(Unchecked{}, ell, m, std::move(data), true);
}

LabeledPartition LabeledPartition::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) fail(ErrorCode::kInvalidMatrix, "no rows");
  const std::size_t m = rows.front().size();
  std::vector<double> data;
  data.reserve(rows.size() * m);
  for (const auto& r : rows) {
    if (r.size() != m) fail(ErrorCode::kInvalidMatrix, "ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return LabeledPartition(rows.size(), m, std::move(data));
}

std::vector<double> LabeledPartition::column(std::size_t j) const {
  if (j >= m_) fail(ErrorCode::kIndexOutOfRange, "column index out of range");
  std::vector<double> col(ell_);
  for (std::size_t k = 0; k < ell_; ++k) col[k] = data_[k * m_ + j];
  return col;
}

LabeledPartition LabeledPartition::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != ell_ || !is_permutation_of_range(perm))
    fail(ErrorCode::kInvalidArgument, "not a permutation of the rows");
  std::vector<double> out(data_.size());
  for (std::size_t a = 0; a < ell_; ++a)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(perm[a] * m_), m_,
                out.begin() + static_cast<std::ptrdiff_t>(a * m_));
  return LabeledPartition(Unchecked{}, ell_, m_, std::move(out), hard_);
}

std::vector<int> LabeledPartition::labels() const {
  if (!hard_) fail(ErrorCode::kInvalidArgument, "labels requested for a soft partition");
  std::vector<int> out(m_, 0);
  for (std::size_t k = 0; k < ell_; ++k)
    for (std::size_t j = 0; j < m_; ++j)
      if (data_[k * m_ + j] == 1.0) out[j] = static_cast<int>(k);
  return out;
}

double LabeledPartition::squared_norm() const noexcept {
  double s = 0.0;
  for (double v : data_) s += v * v;
  return s;
}

void require_same_shape(const LabeledPartition& a, const LabeledPartition& b) {
  if (a.ell() != b.ell() || a.m() != b.m())
    fail(ErrorCode::kDimensionMismatch,
         "shape " + std::to_string(a.ell()) + "x" + std::to_string(a.m()) + " vs " +
             std::to_string(b.ell()) + "x" + std::to_string(b.m()));
}

void require_same_shape(const Partition& a, const Partition& b) {
  require_same_shape(a.canonical(), b.canonical());
}

double squared_distance(const LabeledPartition& a, const LabeledPartition& b) {
  require_same_shape(a, b);
  const auto x = a.entries();
  const auto y = b.entries();
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

double frobenius_distance(const LabeledPartition& a, const LabeledPartition& b) {
  return std::sqrt(squared_distance(a, b));
}

double max_abs_difference(const LabeledPartition& a, const LabeledPartition& b) {
  require_same_shape(a, b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

LabeledPartition average(std::span<const LabeledPartition> reps) {
  if (reps.empty()) fail(ErrorCode::kEmptySet, "average of no representatives");
  const std::size_t ell = reps.front().ell();
  const std::size_t m = reps.front().m();
  std::vector<double> sum(ell * m, 0.0);
  for (const auto& r : reps) {
    require_same_shape(reps.front(), r);
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += r.entries()[i];
  }
  const double inv = 1.0 / static_cast<double>(reps.size());
  for (double& v : sum) v *= inv;
  // Averages of valid columns stay valid up to rounding.
  const bool hard = detect_hard(sum);
  return LabeledPartition(LabeledPartition::Unchecked{}, ell, m, std::move(sum), hard);
}

Partition::Partition(const LabeledPartition& rep) : canonical_(rep) {
  const std::size_t ell = rep.ell();
  std::vector<std::size_t> order(ell);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&rep](std::size_t a, std::size_t b) {
    const auto ra = rep.row(a);
    const auto rb = rep.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });
  canonical_ = rep.permuted(order);
}

Partition canonicalize(const LabeledPartition& rep) { return Partition(rep); }

bool canonical_less(const Partition& a, const Partition& b) {
  const auto x = a.canonical().entries();
  const auto y = b.canonical().entries();
  if (a.ell() != b.ell()) return a.ell() < b.ell();
  if (a.m() != b.m()) return a.m() < b.m();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

bool equal(const Partition& a, const Partition& b, double tol) {
  if (a.ell() != b.ell() || a.m() != b.m()) return false;
  if (a.is_hard() && b.is_hard()) return a.canonical() == b.canonical();
  if (max_abs_difference(a.canonical(), b.canonical()) <= tol) return true;
  // Nearly tied rows can sort differently; fall back to the best alignment.
  const auto res = align(a.canonical(), b.canonical());
  return max_abs_difference(a.canonical(), res.aligned) <= tol;
}

AlignmentResult align(const LabeledPartition& target, const LabeledPartition& moving) {
  require_same_shape(target, moving);
  const std::size_t ell = target.ell();
  // ||X - PY||^2 = ||X||^2 + ||Y||^2 - 2 sum_a <x_a, y_perm(a)>.
  std::vector<double> profit(ell * ell, 0.0);
  for (std::size_t a = 0; a < ell; ++a) {
    const auto xa = target.row(a);
    for (std::size_t b = 0; b < ell; ++b) {
      const auto yb = moving.row(b);
      double dot = 0.0;
      for (std::size_t j = 0; j < xa.size(); ++j) dot += xa[j] * yb[j];
      profit[a * ell + b] = dot;
    }
  }
  auto sol = max_profit_assignment(profit, ell);
  auto aligned = moving.permuted(sol.assignment);
  AlignmentResult out{0.0, std::move(sol.assignment), std::move(aligned)};
  out.distance = frobenius_distance(target, out.aligned);
  return out;
}

AlignmentResult delta(const Partition& x, const Partition& y) {
  return align(x.canonical(), y.canonical());
}

AlignmentResult optimal_position(const Partition& x, const Partition& y) {
  return align(x.canonical(), y.canonical());
}

double degree_of_asymmetry(const Partition& z) {
  const auto& rep = z.canonical();
  if (rep.ell() < 2) return std::numeric_limits<double>::infinity();
  double closest = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < rep.ell(); ++a) {
    for (std::size_t b = a + 1; b < rep.ell(); ++b) {
      const auto ra = rep.row(a);
      const auto rb = rep.row(b);
      double s = 0.0;
      for (std::size_t j = 0; j < ra.size(); ++j) {
        const double d = ra[j] - rb[j];
        s += d * d;
      }
      closest = std::min(closest, s);
    }
  }
  return std::sqrt(2.0 * closest);
}

bool in_asymmetry_ball(const Partition& x, const Partition& z, bool strict) {
  require_same_shape(x, z);
  const double alpha = degree_of_asymmetry(z);
  if (std::isinf(alpha)) return true;
  if (alpha == 0.0 && strict) return false;
  // Compare squares: boundary cases such as delta^2 == alpha^2/16 are exact
  // for hard partitions.
  const double d = delta(x, z).distance;
  const double lhs = d * d;
  const double rhs = alpha * alpha / 16.0;
  const double tol = kTolerance * std::max(1.0, rhs);
  return strict ? lhs < rhs - tol : lhs <= rhs + tol;
}

bool in_dirichlet_domain(const LabeledPartition& rep, const LabeledPartition& z_rep) {
  require_same_shape(rep, z_rep);
  const Partition z(z_rep);
  if (degree_of_asymmetry(z) == 0.0)
    fail(ErrorCode::kSymmetricCenter, "Dirichlet domain needs an asymmetric center");
  const double direct = squared_distance(rep, z_rep);
  const double best = align(z_rep, rep).distance;
  return direct <= best * best + kTolerance * std::max(1.0, direct);
}

Partition round_to_hard(const Partition& p) {
  const auto& rep = p.canonical();
  std::vector<int> labels(rep.m(), 0);
  for (std::size_t j = 0; j < rep.m(); ++j) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < rep.ell(); ++k)
      if (rep(k, j) > rep(best, j)) best = k;
    labels[j] = static_cast<int>(best);
  }
  return Partition(LabeledPartition::from_labels(labels, rep.ell()));
}

}  // namespace meanpart
