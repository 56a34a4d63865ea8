#include "queens/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "queens/rng.hpp"

namespace queens {

SolveResult solve_pipeline(int n, uint64_t seed, std::optional<int> stop_opt, int retries) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (retries < 0) throw std::invalid_argument("retries must be non-negative");
  int stop = stop_opt.value_or(default_stop(n));
  if (stop < 0 || stop > n) throw std::invalid_argument("stop must satisfy 0 <= stop <= n");

  SolveResult result;
  result.n = n;
  result.stop = stop;
  result.k = n - stop;
  result.seed = seed;

  for (int attempt = 0; attempt <= retries; ++attempt) {
    SolveAttempt rec;
    rec.seed = seed + static_cast<uint64_t>(attempt);

    GreedyParams params{n, stop, mix_seed(rec.seed, 1), false};
    GreedyOutcome greedy = run_greedy(params);
    rec.placed = greedy.placed;
    rec.phase1_aborted = greedy.aborted;

    if (!greedy.aborted) {
      AbsorptionResult absorbed = run_absorption(greedy.config, mix_seed(rec.seed, 2));
      rec.completed = absorbed.completed;
      rec.abort_step = absorbed.abort_step;
      rec.abort_query = absorbed.abort_query;
      if (absorbed.completed || attempt == retries) {
        result.completed = absorbed.completed;
        result.queens = absorbed.config.queens();
        result.trajectory = std::move(greedy.trajectory);
        // the pairing bound needs 2k <= n; with more holes than that the
        // certificate is undefined and stays null
        if (absorbed.completed && 2 * result.k <= n) {
          result.witness = counting_witness(result.trajectory, n, result.k);
        }
        result.attempts.push_back(rec);
        break;
      }
    } else if (attempt == retries) {
      result.queens = greedy.config.queens();
      result.trajectory = std::move(greedy.trajectory);
      result.attempts.push_back(rec);
      break;
    }
    result.attempts.push_back(rec);
  }

  std::sort(result.queens.begin(), result.queens.end());
  return result;
}

}  // namespace queens
