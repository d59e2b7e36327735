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

#include "meanpart/alignment.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "meanpart/error.hpp"

namespace meanpart {

Sample::Sample(std::vector<Partition> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) fail(ErrorCode::kEmptySet, "sample must contain a partition");
  for (const auto& p : elements_) require_same_shape(elements_.front(), p);
}

void validate_alignment(const Sample& sample, const MultipleAlignment& a) {
  if (a.reps.size() != sample.size())
    fail(ErrorCode::kDimensionMismatch, "alignment and sample sizes differ");
  for (std::size_t i = 0; i < sample.size(); ++i) {
    require_same_shape(sample[i].canonical(), a.reps[i]);
    if (!(canonicalize(a.reps[i]).canonical() == sample[i].canonical()))
      fail(ErrorCode::kInvalidArgument,
           "representative " + std::to_string(i) + " is not in the orbit of its element");
  }
}

double alignment_cost(const MultipleAlignment& a) {
  const std::size_t n = a.reps.size();
  if (n == 0) return 0.0;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) total += 2.0 * squared_distance(a.reps[i], a.reps[j]);
  return total / static_cast<double>(n * n);
}

MultipleAlignment align_sample_to(const Sample& sample, const LabeledPartition& z_rep) {
  require_same_shape(sample[0].canonical(), z_rep);
  MultipleAlignment out;
  out.reps.reserve(sample.size());
  out.permutations.reserve(sample.size());
  for (const auto& x : sample) {
    auto res = align(z_rep, x.canonical());
    out.reps.push_back(std::move(res.aligned));
    out.permutations.push_back(std::move(res.permutation));
  }
  return out;
}

std::uint64_t alignment_enumeration_count(std::size_t ell, std::size_t n) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t f = factorial_capped(ell, kMax);
  std::uint64_t total = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (f != 0 && total > kMax / f) return kMax;
    total *= f;
  }
  return total;
}

ExactAlignmentResult exact_optimal_alignment(const Sample& sample, std::uint64_t budget,
                                             double dedup_tol) {
  const std::size_t n = sample.size();
  const std::size_t ell = sample.ell();
  const std::size_t m = sample.m();
  const std::uint64_t count = alignment_enumeration_count(ell, n);
  if (count > budget)
    fail(ErrorCode::kBudgetExceeded,
         "exact alignment needs " +
             (count == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                  : std::to_string(count)) +
             " enumerations, budget is " + std::to_string(budget));

  std::vector<Permutation> perms;
  {
    Permutation p = identity_permutation(ell);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
  }

  // f_n = (2/n) sum ||X_i||^2 - (2/n^2) ||sum_i X_i||^2, and the first term
  // is fixed, so minimizing f_n means maximizing the norm of the sum.
  double fixed_norms = 0.0;
  for (const auto& x : sample) fixed_norms += x.canonical().squared_norm();

  std::vector<double> sum(sample[0].canonical().entries().begin(),
                          sample[0].canonical().entries().end());
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    const auto e = sample[i].canonical().entries();
    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += e[t];
  }
  auto shift = [&](std::size_t i, std::size_t from, std::size_t to) {
    const auto e = sample[i].canonical().entries();
    const auto& pf = perms[from];
    const auto& pt = perms[to];
    for (std::size_t a = 0; a < ell; ++a) {
      if (pf[a] == pt[a]) continue;
      double* dst = sum.data() + a * m;
      const double* add = e.data() + pt[a] * m;
      const double* sub = e.data() + pf[a] * m;
      for (std::size_t j = 0; j < m; ++j) dst[j] += add[j] - sub[j];
    }
  };
  // Odometer over digits 1..n-1; the last digit moves fastest, so tuples
  // are visited in lexicographic order.
  auto advance = [&] {
    for (std::size_t pos = n - 1; pos >= 1; --pos) {
      if (digit[pos] + 1 < perms.size()) {
        shift(pos, digit[pos], digit[pos] + 1);
        ++digit[pos];
        return true;
      }
      shift(pos, digit[pos], 0);
      digit[pos] = 0;
    }
    return false;
  };
  auto sum_norm = [&] {
    double s = 0.0;
    for (double v : sum) s += v * v;
    return s;
  };

  const bool hard = std::all_of(sample.begin(), sample.end(),
                                [](const Partition& p) { return p.is_hard(); });
  struct MeanEntry {
    Partition mean;
    std::uint64_t tuples;
  };
  std::vector<MeanEntry> means;
  double best = -1.0;
  std::vector<std::size_t> best_digits;
  std::uint64_t minimizers = 0;
  std::uint64_t enumerated = 0;
  const double inv_n = 1.0 / static_cast<double>(n);

  auto record_mean = [&] {
    std::vector<double> mean(sum.size());
    for (std::size_t t = 0; t < sum.size(); ++t) mean[t] = std::clamp(sum[t] * inv_n, 0.0, 1.0);
    Partition p(LabeledPartition(ell, m, std::move(mean)));
    for (auto& entry : means) {
      if (equal(entry.mean, p, dedup_tol)) {
        ++entry.tuples;
        return;
      }
    }
    means.push_back({std::move(p), 1});
  };

  while (true) {
    ++enumerated;
    const double score = sum_norm();
    const double tol = hard ? 0.0 : kTolerance * std::max(1.0, std::abs(best));
    if (score > best + tol) {
      best = score;
      best_digits = digit;
      minimizers = 1;
      means.clear();
      record_mean();
    } else if (score >= best - tol) {
      ++minimizers;
      record_mean();
    }
    if (!advance()) break;
  }

  ExactAlignmentResult out;
  out.enumerated = enumerated;
  out.minimizer_count = minimizers;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& perm = perms[best_digits[i]];
    out.alignment.reps.push_back(sample[i].canonical().permuted(perm));
    out.alignment.permutations.push_back(perm);
  }
  out.cost = alignment_cost(out.alignment);
  // Guard against the closed form drifting from the direct evaluation.
  const double closed = 2.0 * fixed_norms * inv_n - 2.0 * best * inv_n * inv_n;
  if (std::abs(closed - out.cost) > 1e-6 * std::max(1.0, out.cost))
    fail(ErrorCode::kInternal, "alignment cost identity violated");
  out.projected_means.reserve(means.size());
  for (auto& e : means) out.projected_means.push_back(std::move(e.mean));
  std::sort(out.projected_means.begin(), out.projected_means.end(), canonical_less);
  return out;
}

}  // namespace meanpart
