#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "helpers.hpp"
#include "queens/absorb.hpp"
#include "queens/oracle.hpp"

using namespace queens;

TEST_SUITE_BEGIN("oracle");

TEST_CASE("classical counts match the known sequence") {
  const uint64_t expect[] = {1, 0, 0, 2, 10, 4, 40, 92, 352};
  for (int n = 1; n <= 9; ++n) {
    CHECK(enumerate_classic(n).count == expect[n - 1]);
  }
}

TEST_CASE("backtracking agrees with the permutation filter") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(enumerate_classic(n).count == enumerate_classic_permfilter(n));
  }
}

TEST_CASE("toroidal counts") {
  CHECK(enumerate_toroidal(4).count == 0);
  CHECK(enumerate_toroidal(5).count == 10);
  CHECK(enumerate_toroidal(7).count == 28);
  for (int n = 2; n <= 9; ++n) {
    if (std::gcd(n, 6) != 1) {
      CHECK(enumerate_toroidal(n).count == 0);
    }
  }
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(enumerate_classic(15), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_toroidal(15), std::invalid_argument);
  CHECK_NOTHROW(enumerate_classic(15, true));
  PartialConfig big(40);
  CHECK_THROWS_AS(brute_absorbers(big, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(brute_safe_absorbers({}, {1, 1}, 40), std::invalid_argument);
}

TEST_CASE("brute absorbers on documented boards") {
  PartialConfig single(5);
  single.place({2, 4}, Rule::Classical);
  CHECK(brute_absorbers(single, {1, 1}) == std::vector<Position>{{2, 4}});
  CHECK(brute_absorbers(single, {1, 1}) == absorbers(single, {1, 1}));
  CHECK(brute_absorbers(PartialConfig(8), {3, 3}).empty());
}

TEST_CASE("brute and optimized absorbers agree on random configurations") {
  Rng rng(606);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 10;
    PartialConfig cfg = testing::random_partial_config(
        n, uniform_below(rng, 2) ? Rule::Toroidal : Rule::Classical, n, rng);
    AbsorberQuery q{static_cast<int>(uniform_below(rng, n)) + 1,
                    static_cast<int>(uniform_below(rng, n)) + 1};
    REQUIRE(brute_absorbers(cfg, q) == absorbers(cfg, q));
  }
}

TEST_CASE("brute safe absorbers: golden instance and empties") {
  std::vector<Position> fig{{4, 1}, {7, 2}, {1, 3}, {3, 7}, {8, 8}};
  std::vector<Position> safe = brute_safe_absorbers(fig, {5, 4}, 8);
  CHECK(std::find(safe.begin(), safe.end(), Position{8, 8}) != safe.end());
  CHECK(brute_safe_absorbers({}, {3, 3}, 8).empty());
}

TEST_CASE("brute and optimized safe absorbers agree on binomial subsets") {
  Rng rng(607);
  int n = 12;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<Position> r_set;
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        if (uniform_unit(rng) < 1.0 / (4.0 * n)) r_set.push_back({x, y});
      }
    }
    AbsorberQuery q{static_cast<int>(uniform_below(rng, n)) + 1,
                    static_cast<int>(uniform_below(rng, n)) + 1};
    REQUIRE(brute_safe_absorbers(r_set, q, n) == safe_absorbers(r_set, q, n));
  }
}

TEST_CASE("brute and optimized safe absorbers agree on denser subsets") {
  Rng rng(608);
  int n = 10;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Position> r_set;
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        if (uniform_unit(rng) < 0.08) r_set.push_back({x, y});
      }
    }
    AbsorberQuery q{static_cast<int>(uniform_below(rng, n)) + 1,
                    static_cast<int>(uniform_below(rng, n)) + 1};
    REQUIRE(brute_safe_absorbers(r_set, q, n) == safe_absorbers(r_set, q, n));
  }
}

TEST_SUITE_END();
