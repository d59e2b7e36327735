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

#include <doctest.h>

#include <cmath>

#include "meanpart/error.hpp"
#include "meanpart/frechet.hpp"
#include "oracles.hpp"

using namespace meanpart;

namespace {

LabeledPartition lp(std::vector<int> labels, std::size_t ell) {
  return LabeledPartition::from_labels(labels, ell);
}

const Partition kX(lp({0, 0, 1}, 2));
const Partition kY(lp({0, 1, 1}, 2));
// Columns e1, (e1 + e2) / 2, e2.
const Partition kMid(LabeledPartition::from_rows({{1.0, 0.5, 0.0}, {0.0, 0.5, 1.0}}));

std::vector<Partition> random_sample(oracle::Gen& g, std::size_t n, std::size_t ell,
                                     std::size_t m) {
  std::vector<Partition> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(oracle::random_any(g, ell, m));
  return out;
}

}  // namespace

TEST_CASE("Frechet function") {
  CHECK(frechet(Sample({kX, kX, kX}), kX) == 0.0);
  CHECK(frechet(Sample({kX, kY}), kX) == doctest::Approx(1.0));
  CHECK(frechet(Sample({kX, kY}), kMid) == doctest::Approx(0.5));
  CHECK_THROWS_AS(frechet(Sample({kX}), Partition(lp({0, 1}, 2))), Error);

  oracle::Gen g(31);
  for (int rep = 0; rep < 30; ++rep) {
    const auto s = random_sample(g, 4, 3, 4);
    const Partition z(oracle::random_any(g, 3, 4));
    CHECK(std::abs(frechet(Sample(s), z) - oracle::frechet(s, z)) <= 1e-9);
  }
}

TEST_CASE("heuristic examples") {
  const auto same = mean_heuristic(Sample({kY, kY, kY}), kX);
  CHECK(same.mean == kY);
  CHECK(same.frechet_value == 0.0);
  CHECK(same.iterations == 1);
  CHECK(same.converged);

  const auto pair = mean_heuristic(Sample({kX, kY}), kX);
  CHECK(pair.mean == kMid);
  CHECK(pair.frechet_value == doctest::Approx(0.5));
  CHECK(pair.converged);
}

TEST_CASE("heuristic reaches a fixed point with a non-increasing trace") {
  oracle::Gen g(32);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 2 + g() % 7, ell = 2 + g() % 3, m = 3 + g() % 6;
    const Sample s(random_sample(g, n, ell, m));
    const auto r = mean_heuristic(s, s[0]);
    for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i] <= r.trace[i - 1] + 1e-12);
    if (r.converged) CHECK(fixed_point_residual(s, r.mean.canonical()) <= 1e-9);
    CHECK(std::abs(r.frechet_value - frechet(s, r.mean)) <= 1e-9);
  }
}

TEST_CASE("heuristic from the best element matches the exact minimum on small samples") {
  oracle::Gen g(33);
  std::size_t agree = 0;
  const int total = 40;
  for (int rep = 0; rep < total; ++rep) {
    std::vector<Partition> parts;
    for (int i = 0; i < 5; ++i) parts.emplace_back(oracle::random_hard(g, 2, 6));
    const Sample s(parts);
    const auto exact = mean_exact(s);
    const auto heur = mean_heuristic(s, s[best_medoid(s)]);
    CHECK(heur.frechet_value >= exact.frechet_value - 1e-9);
    agree += std::abs(heur.frechet_value - exact.frechet_value) <= 1e-9;
  }
  // A local search: most runs, though not necessarily all, find the optimum.
  CHECK(agree >= static_cast<std::size_t>(total * 3 / 4));
}

TEST_CASE("exact mean and mean set") {
  const auto same = mean_exact(Sample({kX, kX}));
  CHECK(same.mean == kX);
  CHECK(same.minimizer_count == 1);

  const auto pair = mean_exact(Sample({kX, kY}));
  CHECK(pair.mean == kMid);
  CHECK(pair.frechet_value == doctest::Approx(0.5));

  CHECK(mean_set(Sample({kX, kX, kX})).size() == 1);
  const Sample amb({Partition(lp({0, 1}, 2)), Partition(lp({0, 0}, 2))});
  const auto set = mean_set(amb);
  CHECK(set.size() == 2);
  CHECK(frechet(amb, set[0]) == doctest::Approx(frechet(amb, set[1])));
}

TEST_CASE("exact mean is never beaten by probes") {
  oracle::Gen g(34);
  for (int rep = 0; rep < 15; ++rep) {
    const auto parts = random_sample(g, 3, 3, 4);
    const Sample s(parts);
    const auto r = mean_exact(s);
    for (int probe = 0; probe < 100; ++probe) {
      const Partition z(oracle::random_any(g, 3, 4));
      CHECK(r.frechet_value <= frechet(s, z) + 1e-9);
    }
    for (const auto& x : parts) CHECK(r.frechet_value <= frechet(s, x) + 1e-9);
  }
}

TEST_CASE("multi-start and dispatch") {
  oracle::Gen g(35);
  const Sample s(random_sample(g, 6, 3, 5));
  HeuristicOptions h;
  h.seed = 9;
  const auto a = mean_multistart(s, h);
  const auto b = mean_multistart(s, h);
  CHECK(a.mean.canonical() == b.mean.canonical());
  CHECK(a.frechet_value <= mean_heuristic(s, s[best_medoid(s)]).frechet_value + 1e-12);

  MeanOptions auto_opts;
  CHECK(compute_mean_set(s, auto_opts).exact);
  MeanOptions heur;
  heur.method = MeanMethod::kHeuristic;
  const auto hs = compute_mean_set(s, heur);
  CHECK_FALSE(hs.exact);
  CHECK(hs.means.size() == 1);
  MeanOptions tight;
  tight.budget = 10;
  CHECK_FALSE(compute_mean_set(s, tight).exact);
  tight.method = MeanMethod::kExact;
  CHECK_THROWS_AS(compute_mean_set(s, tight), Error);
}
