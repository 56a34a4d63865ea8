#pragma once

#include <cstdint>
#include <vector>

#include "queens/board.hpp"

namespace queens {

struct GreedyParams {
  int n = 0;
  int stop = 0;  // target queen count, 0 <= stop <= n
  uint64_t seed = 0;
  bool record_lines = false;
};

// Default phase-1 stopping point: n - ceil(n^0.7), clamped to at least 1.
int default_stop(int n);

// The asymptotic form floor((1 - n^-alpha) * n). Collapses to ~0 for any
// feasible n at the nominal alpha = 1e-4; kept as an alternative generator.
int stop_from_alpha(int n, double alpha);

struct LineStepStats {
  int min_s = 0;
  int max_s = 0;
  double mean_s = 0.0;
};

// Per-step record of a greedy run. Step t describes the state with t queens
// placed, immediately before the t-th choice; available[t] is the number of
// choices the process had at that moment.
//
// When line records are enabled, line_s holds one row per step with 4n
// entries (rows, cols, toroidal plus, toroidal minus, each indexed from 0);
// the entry is the count of available cells in that line, or -1 once the
// line is occupied.
struct Trajectory {
  int n = 0;
  std::vector<int64_t> available;
  bool has_line_records = false;
  std::vector<LineStepStats> line_stats;
  std::vector<std::vector<int32_t>> line_s;
};

struct GreedyOutcome {
  PartialConfig config;
  int placed = 0;
  bool aborted = false;
  Trajectory trajectory;
};

// Algorithm: repeatedly place a uniformly random queen among the positions
// whose row, column, and toroidal diagonals are all unoccupied; stop after
// `stop` placements, or abort (freezing the configuration) if none remain.
// Identical params give bit-identical outcomes on any platform.
GreedyOutcome run_greedy(const GreedyParams& params);

// I.i.d. uniform ranks on the n x n grid, row-major.
struct RankGrid {
  int n = 0;
  std::vector<double> rank;  // size n*n; rank[(row-1)*n + (col-1)]

  double at(Position p) const { return rank[static_cast<size_t>(p.row - 1) * n + (p.col - 1)]; }
};

RankGrid make_rank_grid(int n, uint64_t seed);

// Rank-coupled variant: at each step places the available position of
// minimum rank (ties broken by (row, col) order). A deterministic function
// of the grid, distributionally identical to run_greedy.
GreedyOutcome run_greedy_coupled(const RankGrid& grid, int stop);

// True iff for every consecutive step pair and every line unoccupied at
// both, the recorded per-line available count changed by at most 4.
// Throws std::invalid_argument when the run kept no line records.
bool step_change_audit(const GreedyOutcome& outcome);

}  // namespace queens
