/**
Copyright 2026 The sl2cf Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
**/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "sl2cf/lattice.hpp"

using namespace sl2cf;

TEST_CASE("solve_unimodular examples") {
  auto s = solve_unimodular(2, 3);
  REQUIRE(s);
  CHECK(*s == std::pair<std::int64_t, std::int64_t>{1, 2});
  CHECK(*solve_unimodular(1, 0) == std::pair<std::int64_t, std::int64_t>{0, 1});
  CHECK_FALSE(solve_unimodular(2, 4));
  CHECK(*solve_unimodular(0, 1) == std::pair<std::int64_t, std::int64_t>{-1, 0});
  CHECK(*solve_unimodular(0, -1) == std::pair<std::int64_t, std::int64_t>{1, 0});
  CHECK_FALSE(solve_unimodular(0, 2));
  CHECK_THROWS_AS(solve_unimodular(0, 0), std::invalid_argument);
}

TEST_CASE("solve_unimodular solves k n - l m = 1 for coprime pairs") {
  for (std::int64_t k = 0; k <= 40; ++k)
    for (std::int64_t m = -40; m <= 40; ++m) {
      if (k == 0 && m == 0) continue;
      auto s = solve_unimodular(k, m);
      REQUIRE(s.has_value() == (std::gcd(k, m) == 1));
      if (s) REQUIRE(k * s->second - s->first * m == 1);
    }
}

TEST_CASE("brute force oracle") {
  CHECK(brute_ball_oracle(0).empty());
  // every unimodular matrix has norm >= 2|det| = 2
  CHECK(brute_ball_oracle(1).empty());
  CHECK(brute_ball_oracle(2).size() == 13);
  CHECK(brute_ball_oracle(3).size() == 31);
  CHECK(brute_ball_oracle(5).size() == 75);
  CHECK(brute_ball_oracle(10).size() == 309);
  CHECK_THROWS_AS(brute_ball_oracle(21), std::invalid_argument);
  const auto r2 = brute_ball_oracle(2);
  CHECK(r2.count(UniMatrix{1, 0, 0, 1}));
  CHECK(r2.count(UniMatrix{0, 1, -1, 0}));
  CHECK(r2.count(UniMatrix{0, -1, 1, 0}));
}

TEST_CASE("enumerate_ball matches the brute force oracle") {
  for (std::int64_t r = 1; r <= 12; ++r) {
    const auto emitted = enumerate_ball(r);
    const std::set<UniMatrix> as_set(emitted.begin(), emitted.end());
    INFO("r = " << r);
    REQUIRE(as_set.size() == emitted.size());
    REQUIRE(as_set == brute_ball_oracle(r));
  }
  CHECK_THROWS_AS(enumerate_ball(0), std::invalid_argument);
}

TEST_CASE("enumerate_ball postconditions and nesting") {
  const auto big = enumerate_ball(100);
  for (const auto& M : big) {
    REQUIRE(M.det() == 1);
    REQUIRE(M.norm_sq() <= 10000);
    REQUIRE(M.k >= 0);
  }
  // deterministic order: k ascending, then m, then the shift (l for k > 0)
  CHECK(std::is_sorted(big.begin(), big.end(), [](const UniMatrix& a, const UniMatrix& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.m != b.m) return a.m < b.m;
    return a.k > 0 ? a.l < b.l : a.n * a.m < b.n * b.m;
  }));
  const auto small = enumerate_ball(40);
  const std::set<UniMatrix> big_set(big.begin(), big.end());
  for (const auto& M : small) REQUIRE(big_set.count(M));
  CHECK(enumerate_ball(100) == big);
}

TEST_CASE("ball partitions by k concatenate to the full order") {
  std::vector<UniMatrix> pieces;
  for (std::int64_t k = 0; k <= 30; k += 7)
    for_each_in_ball(30, [&](const UniMatrix& M) { pieces.push_back(M); }, k, k + 7);
  CHECK(pieces == enumerate_ball(30));
}

TEST_CASE("classify examples") {
  CHECK(classify({1, 1, 1, 2}) == MatrixClass::Hyperbolic);
  CHECK(classify({1, 1, 0, 1}) == MatrixClass::Parabolic);
  CHECK(classify({0, 1, -1, 0}) == MatrixClass::Elliptic);
  CHECK(classify({-1, 0, 3, -1}) == MatrixClass::Parabolic);
}

TEST_CASE("eigen_slope examples") {
  CHECK(eigen_slope({1, 1, 1, 2}) == Surd{1, 1, 5, 2});
  CHECK(eigen_slope({0, 1, -1, -4}) == Surd{-2, 1, 3, 1});
  CHECK_FALSE(eigen_slope({1, 0, 5, 1}));
  CHECK_FALSE(eigen_slope({0, 1, -1, 0}));
  CHECK(eigen_slope({1, 1, 0, 1}) == Surd{0, 0, 0, 1});
}

TEST_CASE("hyperbolic slopes are irrational roots of l y^2 + (k - n) y - m") {
  for (const auto& M : enumerate_ball(60)) {
    if (classify(M) != MatrixClass::Hyperbolic) continue;
    REQUIRE(M.l != 0);
    const auto slope = eigen_slope(M);
    REQUIRE(slope);
    REQUIRE_FALSE(slope->is_rational());
    for (const Surd& y : {*slope, conjugate(*slope)}) {
      // (u + v sqrt w)^2 l + (k - n)(u + v sqrt w) z - m z^2 == 0, split into rational and radical parts
      const Integer rational_part = Integer(M.l) * (y.u * y.u + y.v * y.v * y.w) + Integer(M.k - M.n) * y.u * y.z -
                                    Integer(M.m) * y.z * y.z;
      const Integer radical_part = Integer(M.l) * 2 * y.u * y.v + Integer(M.k - M.n) * y.v * y.z;
      REQUIRE(rational_part == 0);
      REQUIRE(radical_part == 0);
    }
  }
}
