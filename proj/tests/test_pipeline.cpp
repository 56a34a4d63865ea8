#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "queens/oracle.hpp"
#include "queens/pipeline.hpp"

using namespace queens;

TEST_SUITE_BEGIN("pipeline");

TEST_CASE("single cell solves immediately") {
  SolveResult r = solve_pipeline(1, 7);
  CHECK(r.completed);
  CHECK(r.queens == std::vector<Position>{{1, 1}});
  CHECK(r.stop == 1);
  CHECK(r.k == 0);
  CHECK(r.attempts.size() == 1);
}

TEST_CASE("impossible boards exhaust their retries") {
  for (int n : {2, 3}) {
    SolveResult r = solve_pipeline(n, 0, std::nullopt, 2);
    CHECK_FALSE(r.completed);
    CHECK(r.attempts.size() == 3);  // initial + 2 retries
  }
}

TEST_CASE("completed solves verify and are deterministic") {
  int done = 0;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    SolveResult r = solve_pipeline(32, seed);
    if (!r.completed) continue;
    ++done;
    REQUIRE(static_cast<int>(r.queens.size()) == 32);
    PartialConfig cfg(32);
    for (const Position& q : r.queens) cfg.place(q, Rule::Classical);
    REQUIRE(verify(cfg, Rule::Classical));

    SolveResult again = solve_pipeline(32, seed);
    REQUIRE(again.completed == r.completed);
    REQUIRE(again.queens == r.queens);
    REQUIRE(again.attempts.size() == r.attempts.size());
  }
  CHECK(done > 0);
}

TEST_CASE("pipeline output lies in the enumerated solution set") {
  // collect the full solution set for n=8 with an independent enumerator
  std::set<std::vector<int>> all;
  {
    int n = 8;
    std::vector<int> cols(n + 1, 0), perm;
    std::vector<char> used(n + 1, 0), dp(2 * n, 0), dm(2 * n, 0);
    auto rec = [&](auto&& self, int row) -> void {
      if (row > n) {
        all.insert(std::vector<int>(cols.begin() + 1, cols.end()));
        return;
      }
      for (int c = 1; c <= n; ++c) {
        if (used[c] || dp[row + c - 2] || dm[row - c + n - 1]) continue;
        used[c] = dp[row + c - 2] = dm[row - c + n - 1] = 1;
        cols[row] = c;
        self(self, row + 1);
        used[c] = dp[row + c - 2] = dm[row - c + n - 1] = 0;
      }
    };
    rec(rec, 1);
  }
  REQUIRE(all.size() == 92);

  int done = 0;
  for (uint64_t seed = 0; seed < 600 && done < 10; ++seed) {
    SolveResult r = solve_pipeline(8, seed);
    if (!r.completed) continue;
    ++done;
    std::vector<int> cols(8);
    for (const Position& q : r.queens) cols[q.row - 1] = q.col;
    REQUIRE(all.count(cols) == 1);
  }
  CHECK(done > 0);
}

TEST_CASE("witness present exactly when defined") {
  SolveResult big = solve_pipeline(100, 4);
  if (big.completed) {
    REQUIRE(big.witness.has_value());
    CHECK(big.witness->witness > 0.0);
  }
  // at n=8 the default stop leaves more holes than 2k <= n allows
  SolveResult small = solve_pipeline(8, 4);
  CHECK_FALSE(small.witness.has_value());
}

TEST_CASE("attempt seeds advance by one") {
  SolveResult r = solve_pipeline(3, 5, std::nullopt, 2);
  REQUIRE(r.attempts.size() == 3);
  CHECK(r.attempts[0].seed == 5);
  CHECK(r.attempts[1].seed == 6);
  CHECK(r.attempts[2].seed == 7);
}

TEST_SUITE_END();
