#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "helpers.hpp"
#include "queens/board.hpp"

using namespace queens;

TEST_SUITE_BEGIN("board");

TEST_CASE("toroidal classes") {
  CHECK(tor_classes({1, 1}, 8) == std::pair{2, 0});
  CHECK(tor_classes({5, 8}, 8) == std::pair{5, 5});  // 13 mod 8, -3 mod 8
  for (int n : {1, 2, 5, 8, 13, 64}) {
    CHECK(tor_classes({n, n}, n) == std::pair{0, 0});
  }
  CHECK_THROWS_AS(tor_classes({0, 1}, 8), std::invalid_argument);
  CHECK_THROWS_AS(tor_classes({1, 9}, 8), std::invalid_argument);
}

TEST_CASE("far segment sizes") {
  CHECK(far_segment_sizes({1, 1}, 8) == std::pair{7, 0});
  CHECK(far_segment_sizes({1, 10}, 20) == std::pair{10, 9});
  for (int n : {1, 4, 10, 33}) {
    for (int k = 1; k <= n; ++k) {
      CHECK(far_segment_sizes({k, k}, n).second == 0);
    }
  }
  CHECK_THROWS_AS(far_segment_sizes({3, 0}, 8), std::invalid_argument);
}

TEST_CASE("far segment formula matches explicit construction, exhaustively to n=64") {
  for (int n = 1; n <= 64; ++n) {
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        auto [fp, fm] = far_segment_sizes({x, y}, n);
        auto [cells_p, cells_m] = far_segment_cells({x, y}, n);
        REQUIRE(fp == static_cast<int>(cells_p.size()));
        REQUIRE(fm == static_cast<int>(cells_m.size()));
      }
    }
  }
}

TEST_CASE("figure-style far segment membership") {
  // (1,1) on the 8-board: the wrapped part of the sum-class diagonal has
  // 7 cells, all with row+col = 10
  auto [plus, minus] = far_segment_cells({1, 1}, 8);
  CHECK(plus.size() == 7);
  CHECK(minus.empty());
  for (const Position& p : plus) CHECK(p.row + p.col == 10);
}

TEST_CASE("place updates occupancy and rejects rule violations") {
  PartialConfig cfg(4);
  cfg.place({1, 1}, Rule::Toroidal);
  CHECK(cfg.size() == 1);
  CHECK(cfg.row_count(1) == 1);
  CHECK(cfg.col_count(1) == 1);
  CHECK(cfg.tor_plus_count(2) == 1);
  CHECK(cfg.tor_minus_count(0) == 1);

  // (2,2) shares the toroidal minus class 0 with (1,1)
  CHECK_THROWS_AS(cfg.place({2, 2}, Rule::Toroidal), std::invalid_argument);
  CHECK_THROWS_AS(cfg.place({1, 1}, Rule::Toroidal), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(cfg.place({0, 2}, Rule::Toroidal), std::invalid_argument);  // range

  cfg.place({2, 3}, Rule::Toroidal);  // all four line classes differ
  CHECK(cfg.size() == 2);
  CHECK(verify(cfg, Rule::Toroidal));
}

TEST_CASE("classical rule permits toroidal-only conflicts") {
  PartialConfig cfg(5);
  cfg.place({1, 2}, Rule::Classical);
  // (3,5) shares the toroidal plus class (3 mod 5) with (1,2) but not the
  // ordinary diagonal; classical placement must accept it
  cfg.place({3, 5}, Rule::Classical);
  CHECK(cfg.tor_plus_count(3) == 2);
  CHECK(verify(cfg, Rule::Classical));
  CHECK_FALSE(verify(cfg, Rule::Toroidal));
}

TEST_CASE("verify") {
  PartialConfig cfg(5);
  for (Position p : {Position{1, 1}, {2, 3}, {3, 5}, {4, 2}, {5, 4}}) cfg.place(p, Rule::Classical);
  CHECK(verify(cfg, Rule::Classical));

  PartialConfig diag(4);
  diag.place({1, 1}, Rule::Classical);
  CHECK_THROWS(diag.place({2, 2}, Rule::Classical));
  CHECK(verify(PartialConfig(3), Rule::Classical));
  CHECK(verify(PartialConfig(3), Rule::Toroidal));
}

TEST_CASE("available set") {
  PartialConfig empty(4);
  CHECK(available_set(empty).size() == 16);

  PartialConfig one(4);
  one.place({1, 1}, Rule::Toroidal);
  std::vector<Position> expect{{2, 3}, {3, 2}, {3, 4}, {4, 3}};
  CHECK(available_set(one) == expect);
  CHECK(testing::brute_available(one) == expect);

  // a full toroidal configuration leaves nothing available
  PartialConfig full(5);
  for (Position p : {Position{1, 1}, {2, 3}, {3, 5}, {4, 2}, {5, 4}}) full.place(p, Rule::Toroidal);
  CHECK(available_set(full).empty());
}

TEST_CASE("single-queen availability vs brute force for n<=32") {
  for (int n = 1; n <= 32; ++n) {
    Rng rng(77 + n);
    for (int trial = 0; trial < 4; ++trial) {
      Position p{static_cast<int>(uniform_below(rng, n)) + 1, static_cast<int>(uniform_below(rng, n)) + 1};
      PartialConfig cfg(n);
      cfg.place(p, Rule::Toroidal);
      REQUIRE(available_set(cfg) == testing::brute_available(cfg));
    }
  }
}

TEST_CASE("incremental occupancy equals from-scratch recomputation") {
  Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(uniform_below(rng, 15));
    Rule rule = uniform_below(rng, 2) ? Rule::Toroidal : Rule::Classical;
    PartialConfig cfg = testing::random_partial_config(n, rule, n, rng);
    // knock a few queens out again
    while (cfg.size() > 2 && uniform_below(rng, 2)) {
      cfg.remove(cfg.queens()[uniform_below(rng, cfg.queens().size())]);
    }
    auto tables = cfg.occupancy_tables();
    std::array<std::vector<int>, 6> fresh;
    fresh[0].assign(n, 0);
    fresh[1].assign(n, 0);
    fresh[2].assign(n, 0);
    fresh[3].assign(n, 0);
    fresh[4].assign(2 * n - 1, 0);
    fresh[5].assign(2 * n - 1, 0);
    for (const Position& q : cfg.queens()) {
      auto [sp, sm] = tor_classes(q, n);
      fresh[0][q.row - 1]++;
      fresh[1][q.col - 1]++;
      fresh[2][sp]++;
      fresh[3][sm]++;
      fresh[4][q.row + q.col - 2]++;
      fresh[5][q.row - q.col + n - 1]++;
    }
    REQUIRE(tables == fresh);
  }
}

TEST_CASE("toroidal-rule lines: 4n lines, n members each, exact round-trip") {
  for (int n : {1, 2, 3, 5, 8, 12}) {
    std::vector<LineId> lines;
    for (int i = 1; i <= n; ++i) {
      lines.push_back({LineKind::Row, i});
      lines.push_back({LineKind::Col, i});
    }
    for (int c = 0; c < n; ++c) {
      lines.push_back({LineKind::TorDiagPlus, c});
      lines.push_back({LineKind::TorDiagMinus, c});
    }
    CHECK(lines.size() == static_cast<size_t>(4 * n));
    std::map<LineId, std::set<Position>> members;
    for (const LineId& line : lines) {
      auto cells = line_positions(line, n);
      CHECK(cells.size() == static_cast<size_t>(n));
      members[line] = std::set<Position>(cells.begin(), cells.end());
      CHECK(members[line].size() == static_cast<size_t>(n));  // no duplicates
    }
    // position -> lines -> positions closes
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) {
        auto through = lines_through({x, y}, n);
        for (const LineId& line : through) {
          if (line.kind == LineKind::DiagPlus || line.kind == LineKind::DiagMinus) continue;
          REQUIRE(members.at(line).count({x, y}) == 1);
        }
      }
    }
    // and each line's members list the line among their own
    for (const LineId& line : lines) {
      for (const Position& p : members[line]) {
        auto through = lines_through(p, n);
        REQUIRE(std::find(through.begin(), through.end(), line) != through.end());
      }
    }
  }
}

TEST_CASE("every ordinary diagonal sits inside exactly one toroidal diagonal") {
  for (int n : {2, 5, 9}) {
    for (int s = 2; s <= 2 * n; ++s) {
      auto cells = line_positions({LineKind::DiagPlus, s}, n);
      std::set<int> classes;
      for (const Position& p : cells) classes.insert(tor_classes(p, n).first);
      CHECK(classes.size() == 1);
    }
    for (int d = -(n - 1); d <= n - 1; ++d) {
      auto cells = line_positions({LineKind::DiagMinus, d}, n);
      std::set<int> classes;
      for (const Position& p : cells) classes.insert(tor_classes(p, n).second);
      CHECK(classes.size() == 1);
    }
  }
}

TEST_SUITE_END();
