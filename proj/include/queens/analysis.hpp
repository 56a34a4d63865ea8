#pragma once

#include <cstdint>
#include <vector>

#include "queens/absorb.hpp"
#include "queens/greedy.hpp"

namespace queens {

// Idealized trajectory values at step t of an n-board run:
//   p = 1 - t/n            probability a given line is still unoccupied
//   s = n p^3              expected available cells in an unoccupied line
//   eps = n^0.51 (p^-50 - 1)   concentration half-width for s
//   a_pred = n^2 p^4       expected total available cells
//   a_band = n p eps       concentration half-width for a_pred
// At t = n the half-widths degenerate to +infinity.
struct TrajectoryPrediction {
  int t = 0;
  double p = 0.0;
  double s = 0.0;
  double eps = 0.0;
  double a_pred = 0.0;
  double a_band = 0.0;
};

TrajectoryPrediction predict(int t, int n);

struct StepBandReport {
  int t = 0;
  int64_t available = 0;
  double a_pred = 0.0;
  double a_band = 0.0;
  bool paper_avail = false;  // available within a_pred +- a_band
  bool desk_avail = false;   // available within rel_tol * a_pred of a_pred
  int min_s = 0;
  int max_s = 0;
  double s_pred = 0.0;
  double eps = 0.0;
  bool paper_lines = false;  // unoccupied-line extremes within s_pred +- eps
  bool desk_lines = false;   // extremes within rel_tol * s_pred of s_pred
  bool band_vacuous = false;  // eps exceeds n, so the eps-band constrains nothing
};

struct ConcentrationReport {
  std::vector<StepBandReport> steps;
  double paper_avail_frac = 0.0;
  double desk_avail_frac = 0.0;
  double paper_lines_frac = 0.0;
  double desk_lines_frac = 0.0;
  double vacuous_frac = 0.0;
};

// Dual band check per recorded step: the eps-band exactly as defined above
// (honest but asymptotic; flagged vacuous once eps > n) and a plain
// relative-tolerance band. Requires line records.
ConcentrationReport concentration_report(const Trajectory& traj, int n, double rel_tol);

// Log-space counting certificate from one non-aborted run with stop = n - k:
//   log_x         sum over steps of ln(available choices), the realized
//                 count of distinct outcome sequences
//   log_y         ln of the pairing/ordering multiplicity bound
//                 C(n,2k) * (2k)!/(2^k k!) * 2^k * (n-k)!
//   witness       log_x - log_y, a per-run lower bound on ln(#solutions)
//   theoretical   n (ln n - 3) for comparison
//   log_x_formula the idealized sum of ln(n^2 p^4) over the same steps
struct BoundWitness {
  double log_x = 0.0;
  double log_y = 0.0;
  double witness = 0.0;
  double theoretical = 0.0;
  double log_x_formula = 0.0;
};

BoundWitness counting_witness(const Trajectory& traj, int n, int k);

struct SafeCountStats {
  int samples = 0;
  int min = 0;
  int max = 0;
  double mean = 0.0;
};

struct CouplingReport {
  int n = 0;
  double p_param = 0.0;
  int64_t r_size = 0;        // cells with rank below p_param
  int64_t r_tilde_size = 0;  // members of R threatened by no other member
  int placed = 0;            // queens placed by the rank-coupled run
  bool inclusion_holds = false;  // R-tilde is a subset of the run's queens
  SafeCountStats safe_counts;    // |safe_absorbers(R-tilde, q)| over sampled queries
};

// Draws one rank grid, forms the binomial subset R at threshold p_param and
// its unthreatened core, runs the rank-coupled greedy to `stop`, and checks
// the inclusion guarantee. Whenever |R| <= stop the inclusion is a theorem;
// a violation throws std::logic_error.
CouplingReport coupling_experiment(int n, double p_param, uint64_t seed, int stop);

}  // namespace queens
