#pragma once

#include <cstdint>
#include <vector>

#include "queens/board.hpp"

namespace queens {

struct AbsorberQuery {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const AbsorberQuery&, const AbsorberQuery&) = default;
};

// A queen (x,y) is an absorber for (r,c) in Q when (r,c) and (x,y) share no
// ordinary diagonal and the four ordinary diagonals through (r,y) and (x,c)
// are unoccupied by Q minus (x,y). Exchanging such a queen for (r,y),(x,c)
// keeps the configuration valid while newly covering row r and column c.
// Returned sorted by (row, col).
std::vector<Position> absorbers(const PartialConfig& cfg, AbsorberQuery q);

// The exchange itself: (cfg minus a) plus (r, a.col) and (a.row, c).
// Requires a to be an absorber for q and row q.row / column q.col to be
// uncovered; throws std::invalid_argument otherwise.
PartialConfig apply_absorber(const PartialConfig& cfg, AbsorberQuery q, Position a);

struct AbsorptionPlan {
  // i-th smallest uncovered row paired with i-th smallest uncovered column
  std::vector<AbsorberQuery> matching;
  std::vector<Position> choices;  // absorber used at each completed step
};

struct AbsorptionResult {
  bool completed = false;
  PartialConfig config;
  AbsorptionPlan plan;
  int abort_step = -1;  // 1-based failing step, -1 when completed
  AbsorberQuery abort_query;
};

// Completion pass: pairs uncovered rows with uncovered columns and applies
// one absorber exchange per pair, candidates tried in seeded uniform order
// with backtracking on dead ends (a run that never hits an empty absorber
// set follows the plain one-pass procedure exactly). Aborts when the
// capped search exhausts, reporting the deepest failing step and freezing
// the configuration of the first prefix that reached it. cfg must be valid
// under the classical rule (toroidally built configurations qualify).
AbsorptionResult run_absorption(const PartialConfig& cfg, uint64_t seed);

// True iff every query (r,c) on the board has at least ell absorbers.
bool is_ell_absorbing(const PartialConfig& cfg, int ell);

// Safe absorbers for (r,c) in an arbitrary subset R of the board:
// elements (x,y) of R sharing no ordinary diagonal with (r,c), whose
// exchange squares (r,y),(x,c) have all four far segments populated by
// elements of R, such that no element of R outside the witnessing five
// shares a row, column, or toroidal diagonal with any of them. Such an
// absorber survives any extension of R that stays toroidally valid.
std::vector<Position> safe_absorbers(const std::vector<Position>& r_set, AbsorberQuery q, int n);

// Both far segments of p have size at least n/10 (exact rational compare).
bool is_balanced(Position p, int n);

// The region S: positions outside both diagonal bands
//   x - n/10 <= y <= x + n/10   and   (9/10)n - x <= y <= (11/10)n - x.
// For n divisible by 10 every member is balanced.
std::vector<Position> balanced_region(int n);

// Number of positions (x,y) sharing no row, column, or toroidal diagonal
// with (r,c) such that (r,y) and (x,c) both lie in the region S.
int64_t balanced_pair_count(int n, AbsorberQuery q);

}  // namespace queens
