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

#include "meanpart/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meanpart/error.hpp"

namespace meanpart {

double pairwise_diversity(const std::vector<Partition>& set) {
  if (set.empty()) fail(ErrorCode::kEmptySet, "diversity of an empty set");
  const std::size_t n = set.size();
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = delta(set[i], set[j]).distance;
      total += 2.0 * d * d;
    }
  }
  return total / static_cast<double>(n * n);
}

double variation(const Sample& sample, const Partition& m) { return frechet(sample, m); }

HomogeneityCertificate certify_homogeneous(const std::vector<Partition>& partitions,
                                           const std::vector<Partition>& candidates,
                                           const MeanOptions& mean_options,
                                           const std::optional<Partition>& known_mean) {
  if (partitions.empty()) fail(ErrorCode::kEmptySet, "nothing to certify");
  for (const auto& p : partitions) require_same_shape(partitions.front(), p);
  for (const auto& c : candidates) require_same_shape(partitions.front(), c);

  auto certifies = [&partitions](const Partition& z) {
    if (degree_of_asymmetry(z) == 0.0) return false;
    return std::all_of(partitions.begin(), partitions.end(),
                       [&z](const Partition& x) { return in_asymmetry_ball(x, z, true); });
  };
  auto certificate = [](const Partition& z) {
    return HomogeneityCertificate{true, z, degree_of_asymmetry(z) / 4.0};
  };

  for (const auto& z : candidates)
    if (certifies(z)) return certificate(z);
  const Partition mean =
      known_mean ? *known_mean : compute_mean_set(Sample(partitions), mean_options).best.mean;
  if (certifies(mean)) return certificate(mean);
  for (const auto& z : partitions)
    if (certifies(z)) return certificate(z);
  return {};
}

DiversityReport diversity_report(const Sample& sample, const Partition& mean,
                                 const std::vector<Partition>& candidates,
                                 const MeanOptions& mean_options) {
  DiversityReport out;
  out.pairwise_g = pairwise_diversity(sample.elements());
  out.variation_f = variation(sample, mean);
  auto cert = certify_homogeneous(sample.elements(), candidates, mean_options, mean);
  out.homogeneous = cert.homogeneous;
  out.certifying_center = std::move(cert.center);
  out.asymmetry_bound = cert.asymmetry_bound;
  return out;
}

double loss(const Partition& x, const GroundTruth& truth) {
  return delta(truth.partition(), x).distance;
}

LossReport loss_decomposition(const std::vector<Partition>& mean_set, const GroundTruth& truth) {
  if (mean_set.empty()) fail(ErrorCode::kEmptySet, "loss decomposition of an empty mean set");
  LossReport out;
  out.worst = loss(mean_set.front(), truth);
  out.best = out.worst;
  for (const auto& m : mean_set) {
    const double l = loss(m, truth);
    out.worst = std::max(out.worst, l);
    out.best = std::min(out.best, l);
  }
  out.approximation = out.best;
  out.estimation = out.worst - out.best;
  // Keep worst == estimation + approximation bit-exact in floating point.
  for (int step = 0; step < 4 && out.estimation + out.approximation != out.worst; ++step) {
    const double toward = out.estimation + out.approximation < out.worst
                              ? std::numeric_limits<double>::infinity()
                              : -std::numeric_limits<double>::infinity();
    out.estimation = std::nextafter(out.estimation, toward);
  }
  return out;
}

}  // namespace meanpart
