#include <doctest.h>

#include <random>

#include <cfknot/bounds.hpp>
#include <cfknot/errors.hpp>

using namespace cfknot;

TEST_CASE("bridge index validation") {
  CHECK_NOTHROW(BridgeIndices(2, 1));
  CHECK_THROWS_AS(BridgeIndices(2, 2), PreconditionError);
  CHECK_THROWS_AS(BridgeIndices(1, 2), PreconditionError);
  CHECK_THROWS_AS(BridgeIndices(1, 0), PreconditionError);
}

TEST_CASE("growth rate bound on the named examples") {
  const GrowthRateBound two_bridge = growth_rate_bound(BridgeIndices(2, 1));
  CHECK(two_bridge.min_bound == ProjectiveRational(0, 1));
  CHECK(two_bridge.max_bound == ProjectiveRational(0, 1));

  const GrowthRateBound half = growth_rate_bound(BridgeIndices(4, 2));
  CHECK(half.min_bound == ProjectiveRational(1, 2));
  CHECK(half.max_bound == ProjectiveRational(1, 2));

  const GrowthRateBound large = growth_rate_bound(BridgeIndices(100, 50));
  CHECK(large.min_bound == ProjectiveRational(49, 50));
  CHECK(large.max_bound == ProjectiveRational(49, 50));

  const GrowthRateBound uneven = growth_rate_bound(BridgeIndices(9, 4));
  CHECK(uneven.min_bound == ProjectiveRational(3, 4));
  CHECK(uneven.max_bound == ProjectiveRational(7, 9));
  CHECK(uneven.torus_candidate == ProjectiveRational(3, 4));
  CHECK(uneven.sphere_candidate == ProjectiveRational(7, 9));
}

TEST_CASE("growth rate bound stays below one") {
  std::mt19937_64 rng(13579);
  std::uniform_int_distribution<long long> b1_dist(1, 1000000);
  std::uniform_int_distribution<long long> gap_dist(1, 1000000);
  for (int trial = 0; trial < 2000; ++trial) {
    const long long b1 = b1_dist(rng);
    const BridgeIndices bridge(b1 + gap_dist(rng), b1);
    const GrowthRateBound bound = growth_rate_bound(bridge);
    CHECK(bound.min_bound.num() < bound.min_bound.den());
    CHECK(bound.max_bound.num() < bound.max_bound.den());
  }
}

TEST_CASE("epsilon target is the least admissible b1") {
  CHECK(epsilon_target(ProjectiveRational(1, 2)) == 3);
  CHECK(epsilon_target(ProjectiveRational(1, 10)) == 11);
  CHECK(epsilon_target(ProjectiveRational(1, 3)) == 4);
  CHECK(epsilon_target(ProjectiveRational(2, 5)) == 3);
  CHECK_THROWS_AS(epsilon_target(ProjectiveRational(0, 1)), PreconditionError);
  CHECK_THROWS_AS(epsilon_target(ProjectiveRational(1, 1)), PreconditionError);
  CHECK_THROWS_AS(epsilon_target(ProjectiveRational(3, 2)), PreconditionError);
  CHECK_THROWS_AS(epsilon_target(ProjectiveRational(-1, 4)), PreconditionError);
}

TEST_CASE("epsilon target bounds the torus candidate") {
  for (const auto& eps :
       {ProjectiveRational(1, 2), ProjectiveRational(1, 10),
        ProjectiveRational(3, 7)}) {
    const Int target = epsilon_target(eps);
    // 1 - 1/b1 > 1 - eps exactly when eps * b1 > 1.
    CHECK(eps.num() * target > eps.den());
    if (target > 1) {
      CHECK(eps.num() * (target - 1) <= eps.den());
    }
    // With b0 >= 2 b1 the sphere candidate cannot drag the minimum down.
    const GrowthRateBound bound =
        growth_rate_bound(BridgeIndices(2 * target, target));
    CHECK(bound.min_bound == ProjectiveRational(target - 1, target));
  }
}

TEST_CASE("alexander polynomial from the trefoil Seifert matrix") {
  const auto poly = alexander_from_seifert({-1, 1, 0, -1});
  CHECK(poly == std::array<Int, 3>{1, -1, 1});
}

TEST_CASE("alexander polynomial of the zero-slope shape") {
  const auto poly = alexander_from_seifert({0, 1, 2, 0});
  CHECK(poly == std::array<Int, 3>{-2, 5, -2});
  CHECK(alexander_from_seifert({0, 0, 0, 0}) == std::array<Int, 3>{0, 0, 0});
}

TEST_CASE("leading coefficient of the zero-slope shape is even") {
  for (int j = -60; j <= 60; ++j) {
    for (int k = -5; k <= 5; ++k) {
      const auto plus = alexander_from_seifert({0, j, j + 1, k});
      CHECK(plus[2] == -Int(j) * (j + 1));
      CHECK(plus[2] % 2 == 0);
      const auto minus = alexander_from_seifert({0, j, j - 1, k});
      CHECK(minus[2] == -Int(j) * (j - 1));
      CHECK(minus[2] % 2 == 0);
    }
  }
}

TEST_CASE("slope obstruction holds for every j") {
  CHECK(zero_slope_obstruction(0));
  CHECK(zero_slope_obstruction(1));
  CHECK(zero_slope_obstruction(-7));
  for (int j = -1000; j <= 1000; ++j) {
    CHECK(zero_slope_obstruction(j));
  }
}
