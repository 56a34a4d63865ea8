#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "queens/absorb.hpp"
#include "queens/analysis.hpp"
#include "queens/greedy.hpp"

namespace queens {

struct SolveAttempt {
  uint64_t seed = 0;     // seed of this attempt; phase seeds derive from it
  int placed = 0;        // phase 1
  bool phase1_aborted = false;
  bool completed = false;  // phase 2
  int abort_step = -1;
  AbsorberQuery abort_query;
};

struct SolveResult {
  int n = 0;
  int stop = 0;
  int k = 0;  // intended holes, n - stop
  uint64_t seed = 0;
  bool completed = false;
  std::vector<SolveAttempt> attempts;
  std::vector<Position> queens;  // final configuration, sorted by row
  std::optional<BoundWitness> witness;
  Trajectory trajectory;  // phase-1 trajectory of the reported attempt
};

// Two-phase pipeline: random greedy toroidal placement to `stop` queens,
// then absorber-based completion of the remaining rows and columns. On a
// phase-1 or phase-2 abort the attempt is retried with seed+1, seed+2, ...
// up to `retries` extra attempts, every attempt being recorded. Greedy and
// absorption draw from independent streams derived from the attempt seed.
SolveResult solve_pipeline(int n, uint64_t seed, std::optional<int> stop_opt = std::nullopt,
                           int retries = 3);

}  // namespace queens
