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
#include <random>

#include "meanpart/error.hpp"
#include "meanpart/partition.hpp"
#include "oracles.hpp"

using namespace meanpart;

namespace {

LabeledPartition lp(std::vector<int> labels, std::size_t ell) {
  return LabeledPartition::from_labels(labels, ell);
}

// {1,2}{3} and {1}{2,3} on three points.
const LabeledPartition kX = lp({0, 0, 1}, 2);
const LabeledPartition kY = lp({0, 1, 1}, 2);

}  // namespace

TEST_CASE("validation") {
  CHECK_THROWS_AS(LabeledPartition(2, 2, {0.5, 0.5, 0.5, 0.6}), Error);
  CHECK_THROWS_AS(LabeledPartition(2, 1, {1.5, -0.5}), Error);
  CHECK_THROWS_AS(LabeledPartition(2, 2, {1.0, 0.0}), Error);
  CHECK_THROWS_AS(LabeledPartition(0, 2, {}), Error);
  CHECK_THROWS_AS(lp({0, 2}, 2), Error);
  try {
    lp({0, -1}, 2);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kLabelOutOfRange);
  }
  CHECK(LabeledPartition(2, 1, {0.3, 0.7}).m() == 1);
  CHECK(lp({0, 1, 1}, 3).is_hard());
  CHECK_FALSE(LabeledPartition(2, 1, {0.3, 0.7}).is_hard());
}

TEST_CASE("canonical form") {
  const auto sorted = LabeledPartition::from_rows({{0, 0, 1}, {1, 1, 0}});
  const auto swapped = LabeledPartition::from_rows({{1, 1, 0}, {0, 0, 1}});
  CHECK(Partition(sorted).canonical() == sorted);
  CHECK(Partition(swapped).canonical() == sorted);

  oracle::Gen g(3);
  for (int rep = 0; rep < 20; ++rep) {
    const auto x = oracle::random_hard(g, 3, 4);
    const Partition base(x);
    for (const auto& p : oracle::all_perms(3))
      CHECK(Partition(oracle::permute_rows(x, p)).canonical() == base.canonical());
  }
}

TEST_CASE("labels round trip") {
  const std::vector<int> labels{2, 0, 1, 1, 2};
  CHECK(lp(labels, 3).labels() == labels);
  CHECK_THROWS_AS(LabeledPartition(2, 1, {0.5, 0.5}).labels(), Error);
}

TEST_CASE("distance examples") {
  const Partition x(kX), y(kY);
  auto same = delta(x, x);
  CHECK(same.distance == 0.0);
  CHECK(same.permutation == identity_permutation(2));
  CHECK(delta(x, y).distance == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  const auto pos = optimal_position(x, y);
  CHECK(pos.permutation == identity_permutation(2));
  CHECK(pos.aligned == y.canonical());
  CHECK(optimal_position(x, x).aligned == x.canonical());

  // Two identical rows make every permutation optimal.
  const auto z = LabeledPartition::from_rows({{0.5, 0.5}, {0.5, 0.5}});
  const auto w = LabeledPartition::from_rows({{0.2, 0.9}, {0.8, 0.1}});
  CHECK(align(w, z).permutation == identity_permutation(2));

  CHECK_THROWS_AS(delta(x, Partition(lp({0, 1, 1, 0}, 2))), Error);
}

TEST_CASE("distance against the permutation oracle") {
  oracle::Gen g(1);
  for (int rep = 0; rep < 100; ++rep) {
    const auto a = oracle::random_hard(g, 4, 8);
    const auto b = oracle::random_hard(g, 4, 8);
    CHECK(delta(Partition(a), Partition(b)).distance ==
          doctest::Approx(oracle::delta(a, b)).epsilon(1e-12));
  }
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t ell = 1 + g() % 5, m = 1 + g() % 10;
    const auto a = oracle::random_any(g, ell, m);
    const auto b = oracle::random_any(g, ell, m);
    const auto r = delta(Partition(a), Partition(b));
    CHECK(std::abs(r.distance - oracle::delta(a, b)) <= 1e-9);
    // The reported representative realizes the distance.
    CHECK(std::abs(std::sqrt(oracle::sq_frob(Partition(a).canonical(), r.aligned)) - r.distance) <=
          1e-12);
    CHECK(r.distance <= std::sqrt(oracle::sq_frob(a, b)) + 1e-12);
  }
}

TEST_CASE("metric axioms") {
  oracle::Gen g(2);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t ell = 1 + g() % 4, m = 1 + g() % 7;
    const Partition a(oracle::random_any(g, ell, m));
    const Partition b(oracle::random_any(g, ell, m));
    const Partition c(oracle::random_any(g, ell, m));
    const double ab = delta(a, b).distance, ba = delta(b, a).distance;
    CHECK(std::abs(ab - ba) <= 1e-12);
    CHECK(delta(a, a).distance == 0.0);
    CHECK(ab <= delta(a, c).distance + delta(c, b).distance + 1e-9);
  }
}

TEST_CASE("degree of asymmetry") {
  CHECK(degree_of_asymmetry(Partition(LabeledPartition::from_rows({{0.5, 0.5}, {0.5, 0.5}}))) == 0.0);
  CHECK(degree_of_asymmetry(Partition(kX)) == doctest::Approx(std::sqrt(6.0)));
  CHECK(degree_of_asymmetry(Partition(lp({0, 1, 2, 2}, 3))) == doctest::Approx(2.0));
  CHECK(std::isinf(degree_of_asymmetry(Partition(lp({0, 0}, 1)))));

  oracle::Gen g(4);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t ell = 2 + g() % 4, m = 1 + g() % 8;
    const auto z = oracle::random_any(g, ell, m);
    CHECK(std::abs(degree_of_asymmetry(Partition(z)) - oracle::asymmetry(z)) <= 1e-9);
  }
}

TEST_CASE("asymmetry ball") {
  std::vector<int> truth(32);
  for (std::size_t j = 0; j < 32; ++j) truth[j] = static_cast<int>(j % 2);
  const Partition z(lp(truth, 2));
  CHECK(degree_of_asymmetry(z) == doctest::Approx(8.0));
  CHECK(in_asymmetry_ball(z, z, false));
  CHECK(in_asymmetry_ball(z, z, true));

  auto two = truth;
  two[0] ^= 1;
  two[1] ^= 1;
  const Partition x2(lp(two, 2));
  CHECK(delta(x2, z).distance == doctest::Approx(2.0));
  // delta = 2 sits on the sphere of radius 8 / 4.
  CHECK(in_asymmetry_ball(x2, z, false));
  CHECK_FALSE(in_asymmetry_ball(x2, z, true));

  auto one = truth;
  one[5] ^= 1;
  CHECK(in_asymmetry_ball(Partition(lp(one, 2)), z, true));

  const Partition sym(LabeledPartition::from_rows({{0.5, 0.5}, {0.5, 0.5}}));
  CHECK_FALSE(in_asymmetry_ball(sym, sym, true));
  CHECK_FALSE(in_asymmetry_ball(Partition(lp({0, 1}, 2)), sym, true));
}

TEST_CASE("Dirichlet domain") {
  const auto z = lp({0, 0, 1, 2}, 3);
  CHECK(in_dirichlet_domain(z, z));
  CHECK_FALSE(in_dirichlet_domain(z.permuted(std::vector<std::size_t>{1, 0, 2}), z));
  CHECK_THROWS_AS(in_dirichlet_domain(z, LabeledPartition::from_rows({{0.5, 0.5}, {0.5, 0.5}})),
                  Error);

  oracle::Gen g(8);
  for (int rep = 0; rep < 100; ++rep) {
    const auto zr = oracle::random_hard(g, 3, 6);
    if (degree_of_asymmetry(Partition(zr)) == 0.0) continue;
    const auto x = oracle::random_any(g, 3, 6);
    bool expect = true;
    const double direct = oracle::sq_frob(x, zr);
    for (const auto& p : oracle::all_perms(3))
      expect = expect && direct <= oracle::sq_frob(x, oracle::permute_rows(zr, p)) + 1e-9;
    CHECK(in_dirichlet_domain(x, zr) == expect);
  }
}

TEST_CASE("orbit equality and ordering") {
  CHECK(Partition(lp({0, 0, 1}, 2)) == Partition(lp({1, 1, 0}, 2)));
  CHECK_FALSE(Partition(kX) == Partition(kY));
  const auto soft = LabeledPartition::from_rows({{0.3, 1.0}, {0.7, 0.0}});
  const auto near = LabeledPartition::from_rows({{0.7 + 1e-12, 0.0}, {0.3 - 1e-12, 1.0}});
  CHECK(equal(Partition(soft), Partition(near)));
  CHECK_FALSE(equal(Partition(soft), Partition(near), 0.0));
  CHECK(canonical_less(Partition(kX), Partition(kY)) != canonical_less(Partition(kY), Partition(kX)));
}

TEST_CASE("rounding to hard") {
  const auto soft = LabeledPartition::from_rows({{0.2, 0.5, 0.9}, {0.8, 0.5, 0.1}});
  const auto hard = round_to_hard(Partition(soft));
  CHECK(hard.is_hard());
  const Partition ps(soft);
  const auto& c = ps.canonical();
  std::vector<int> expect(3);
  for (std::size_t j = 0; j < 3; ++j) expect[j] = c(0, j) >= c(1, j) ? 0 : 1;
  CHECK(hard == Partition(lp(expect, 2)));
}
