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

#include <optional>
#include <vector>

#include "meanpart/frechet.hpp"
#include "meanpart/jury.hpp"
#include "meanpart/partition.hpp"

namespace meanpart {

// Diversity measures use the squared intrinsic metric as dissimilarity.

/// G(S) = (1/n^2) sum_i sum_j delta(X_i, X_j)^2.
double pairwise_diversity(const std::vector<Partition>& set);

/// F(M) = (1/n) sum_i delta(X_i, M)^2; identical to frechet().
double variation(const Sample& sample, const Partition& m);

struct HomogeneityCertificate {
  bool homogeneous = false;
  std::optional<Partition> center;
  std::optional<double> asymmetry_bound;  // alpha / 4 of the center
};

/// Sufficient-condition search for a common open asymmetry ball. Tries the
/// supplied candidates, then a mean of the partitions, then each partition,
/// and returns the first asymmetric center whose open ball holds every
/// input. "Not homogeneous" here means "not certified".
/// A precomputed mean may be passed to skip the mean computation.
HomogeneityCertificate certify_homogeneous(const std::vector<Partition>& partitions,
                                           const std::vector<Partition>& candidates,
                                           const MeanOptions& mean_options = {},
                                           const std::optional<Partition>& known_mean = {});

struct DiversityReport {
  double pairwise_g = 0.0;
  double variation_f = 0.0;
  bool homogeneous = false;
  std::optional<Partition> certifying_center;
  std::optional<double> asymmetry_bound;
};

DiversityReport diversity_report(const Sample& sample, const Partition& mean,
                                 const std::vector<Partition>& candidates,
                                 const MeanOptions& mean_options = {});

/// L(X) = delta(X, X_*).
double loss(const Partition& x, const GroundTruth& truth);

struct LossReport {
  double worst = 0.0;
  double best = 0.0;
  double estimation = 0.0;
  double approximation = 0.0;
};

/// Worst- and best-case loss over a mean set, with the worst case split into
/// estimation error (worst - best) and approximation error (best).
LossReport loss_decomposition(const std::vector<Partition>& mean_set, const GroundTruth& truth);

}  // namespace meanpart
