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

#include "meanpart/assignment.hpp"

namespace meanpart {

// Absolute tolerance for equality of reals throughout the library.
inline constexpr double kTolerance = 1e-9;

/// A labeled (soft or hard) partition: an ell x m matrix with entries in
/// [0, 1] whose columns sum to one. Entry (k, j) is the membership of data
/// point j in cluster k. Rows may be all zero (empty clusters).
class LabeledPartition {
 public:
  /// Validates ranges and column sums; throws Error(kInvalidMatrix).
  LabeledPartition(std::size_t ell, std::size_t m, std::vector<double> row_major);

  /// Hard partition from integer labels in [0, ell).
  static LabeledPartition from_labels(std::span<const int> labels, std::size_t ell);

  static LabeledPartition from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t ell() const noexcept { return ell_; }
  std::size_t m() const noexcept { return m_; }
  bool is_hard() const noexcept { return hard_; }

  double operator()(std::size_t k, std::size_t j) const { return data_[k * m_ + j]; }
  std::span<const double> row(std::size_t k) const {
    return {data_.data() + k * m_, m_};
  }
  std::span<const double> entries() const noexcept { return data_; }
  std::vector<double> column(std::size_t j) const;

  /// Row a of the result is row perm[a] of this matrix.
  LabeledPartition permuted(std::span<const std::size_t> perm) const;

  /// Cluster label of each point; only defined for hard partitions.
  std::vector<int> labels() const;

  double squared_norm() const noexcept;

  friend bool operator==(const LabeledPartition& a, const LabeledPartition& b) {
    return a.ell_ == b.ell_ && a.m_ == b.m_ && a.data_ == b.data_;
  }

 private:
  struct Unchecked {};
  LabeledPartition(Unchecked, std::size_t ell, std::size_t m, std::vector<double> data,
                   bool hard);

  std::size_t ell_;
  std::size_t m_;
  std::vector<double> data_;
  bool hard_;

  friend LabeledPartition average(std::span<const LabeledPartition>);
};

double squared_distance(const LabeledPartition& a, const LabeledPartition& b);
double frobenius_distance(const LabeledPartition& a, const LabeledPartition& b);
double max_abs_difference(const LabeledPartition& a, const LabeledPartition& b);

/// Entrywise mean of equally sized representatives.
LabeledPartition average(std::span<const LabeledPartition> reps);

/// An unlabeled partition: the orbit of a LabeledPartition under row
/// permutations, stored as the representative with lexicographically sorted
/// rows.
class Partition {
 public:
  explicit Partition(const LabeledPartition& rep);

  const LabeledPartition& canonical() const noexcept { return canonical_; }
  std::size_t ell() const noexcept { return canonical_.ell(); }
  std::size_t m() const noexcept { return canonical_.m(); }
  bool is_hard() const noexcept { return canonical_.is_hard(); }

 private:
  LabeledPartition canonical_;
};

Partition canonicalize(const LabeledPartition& rep);

/// Equality of orbits. Hard partitions compare exactly; otherwise some pair of
/// representatives must agree entrywise within `tol`.
bool equal(const Partition& a, const Partition& b, double tol = kTolerance);

inline bool operator==(const Partition& a, const Partition& b) { return equal(a, b); }

/// Lexicographic order on canonical matrices (exact comparison).
bool canonical_less(const Partition& a, const Partition& b);

struct AlignmentResult {
  double distance = 0.0;
  /// aligned row a is row permutation[a] of the moving argument.
  Permutation permutation;
  LabeledPartition aligned;
};

/// Places `moving` in optimal position with the fixed representative
/// `target`: among all row permutations P, minimizes ||target - P moving||
/// via maximum-profit assignment on row inner products. Ties resolve to the
/// lexicographically smallest permutation.
AlignmentResult align(const LabeledPartition& target, const LabeledPartition& moving);

/// Intrinsic distance between partitions, min over representatives of the
/// Frobenius norm of the difference.
AlignmentResult delta(const Partition& x, const Partition& y);

/// Same minimum as delta; `aligned` is the representative of y in optimal
/// position with x's canonical matrix.
AlignmentResult optimal_position(const Partition& x, const Partition& y);

/// Minimum over non-identity P of ||Z - P Z||, computed as sqrt(2) times the
/// closest pair of rows. Zero iff two rows coincide; +infinity when ell == 1
/// (no non-identity permutation exists).
double degree_of_asymmetry(const Partition& z);

/// delta(x, z) <= alpha_z / 4, or < for the open ball. The open ball of a
/// symmetric partition is empty.
bool in_asymmetry_ball(const Partition& x, const Partition& z, bool strict);

/// ||rep - z_rep|| <= ||rep - P z_rep|| for every P. Throws
/// Error(kSymmetricCenter) if z_rep has a repeated row.
bool in_dirichlet_domain(const LabeledPartition& rep, const LabeledPartition& z_rep);

/// Rounds every column to the basis vector of its largest entry, ties going
/// to the lowest row of the canonical representative.
Partition round_to_hard(const Partition& p);

void require_same_shape(const LabeledPartition& a, const LabeledPartition& b);
void require_same_shape(const Partition& a, const Partition& b);

}  // namespace meanpart
