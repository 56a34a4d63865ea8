#include "queens/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "queens/rng.hpp"

namespace queens {

TrajectoryPrediction predict(int t, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (t < 0 || t > n) throw std::invalid_argument("step t must satisfy 0 <= t <= n");
  TrajectoryPrediction pr;
  pr.t = t;
  double nd = n;
  pr.p = 1.0 - t / nd;
  pr.s = nd * pr.p * pr.p * pr.p;
  if (t == n) {
    pr.eps = std::numeric_limits<double>::infinity();
    pr.a_pred = 0.0;
    pr.a_band = std::numeric_limits<double>::infinity();
    return pr;
  }
  pr.eps = std::pow(nd, 0.51) * (std::pow(pr.p, -50.0) - 1.0);
  pr.a_pred = nd * nd * pr.p * pr.p * pr.p * pr.p;
  pr.a_band = nd * pr.p * pr.eps;
  return pr;
}

ConcentrationReport concentration_report(const Trajectory& traj, int n, double rel_tol) {
  if (!traj.has_line_records) throw std::invalid_argument("trajectory has no line records");
  if (rel_tol < 0.0) throw std::invalid_argument("rel_tol must be non-negative");
  ConcentrationReport rep;
  size_t steps = traj.available.size();
  int paper_a = 0, desk_a = 0, paper_l = 0, desk_l = 0, vac = 0;
  for (size_t i = 0; i < steps; ++i) {
    TrajectoryPrediction pr = predict(static_cast<int>(i), n);
    StepBandReport sb;
    sb.t = static_cast<int>(i);
    sb.available = traj.available[i];
    sb.a_pred = pr.a_pred;
    sb.a_band = pr.a_band;
    sb.s_pred = pr.s;
    sb.eps = pr.eps;
    sb.band_vacuous = pr.eps > n;
    double a = static_cast<double>(sb.available);
    sb.paper_avail = std::abs(a - pr.a_pred) <= pr.a_band;
    sb.desk_avail = std::abs(a - pr.a_pred) <= rel_tol * pr.a_pred;
    const LineStepStats& ls = traj.line_stats[i];
    sb.min_s = ls.min_s;
    sb.max_s = ls.max_s;
    sb.paper_lines = std::abs(ls.min_s - pr.s) <= pr.eps && std::abs(ls.max_s - pr.s) <= pr.eps;
    sb.desk_lines =
        std::abs(ls.min_s - pr.s) <= rel_tol * pr.s && std::abs(ls.max_s - pr.s) <= rel_tol * pr.s;
    paper_a += sb.paper_avail;
    desk_a += sb.desk_avail;
    paper_l += sb.paper_lines;
    desk_l += sb.desk_lines;
    vac += sb.band_vacuous;
    rep.steps.push_back(sb);
  }
  if (steps > 0) {
    double d = static_cast<double>(steps);
    rep.paper_avail_frac = paper_a / d;
    rep.desk_avail_frac = desk_a / d;
    rep.paper_lines_frac = paper_l / d;
    rep.desk_lines_frac = desk_l / d;
    rep.vacuous_frac = vac / d;
  }
  return rep;
}

BoundWitness counting_witness(const Trajectory& traj, int n, int k) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (k < 0 || 2 * k > n) throw std::invalid_argument("k must satisfy 0 <= 2k <= n");
  int stop = n - k;
  if (static_cast<int>(traj.available.size()) != stop) {
    throw std::invalid_argument("trajectory does not come from a non-aborted run with stop = n - k");
  }
  BoundWitness w;
  for (int t = 0; t < stop; ++t) {
    if (traj.available[t] <= 0) throw std::invalid_argument("trajectory records a step with no choices");
    w.log_x += std::log(static_cast<double>(traj.available[t]));
    double a_pred = predict(t, n).a_pred;
    w.log_x_formula += a_pred > 0.0 ? std::log(a_pred) : 0.0;
  }
  double nd = n, kd = k;
  // C(n,2k) * (2k)!/(2^k k!) * 2^k * (n-k)!, accumulated in log space
  w.log_y = (std::lgamma(nd + 1) - std::lgamma(2 * kd + 1) - std::lgamma(nd - 2 * kd + 1)) +
            (std::lgamma(2 * kd + 1) - kd * std::log(2.0) - std::lgamma(kd + 1)) +
            kd * std::log(2.0) + std::lgamma(nd - kd + 1);
  w.witness = w.log_x - w.log_y;
  w.theoretical = nd * (std::log(nd) - 3.0);
  return w;
}

CouplingReport coupling_experiment(int n, double p_param, uint64_t seed, int stop) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (p_param < 0.0 || p_param > 1.0) throw std::invalid_argument("p_param must lie in [0, 1]");
  if (stop < 0 || stop > n) throw std::invalid_argument("stop must satisfy 0 <= stop <= n");
  RankGrid grid = make_rank_grid(n, seed);

  CouplingReport rep;
  rep.n = n;
  rep.p_param = p_param;

  std::vector<Position> r_cells;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (grid.at({x, y}) < p_param) r_cells.push_back({x, y});
    }
  }
  rep.r_size = static_cast<int64_t>(r_cells.size());

  // unthreatened core: members alone in their row, column, and toroidal classes
  auto mod_n = [n](int v) { return ((v % n) + n) % n; };
  std::vector<int> rows(n, 0), cols(n, 0), tps(n, 0), tms(n, 0);
  for (const Position& p : r_cells) {
    rows[p.row - 1]++;
    cols[p.col - 1]++;
    tps[mod_n(p.row + p.col)]++;
    tms[mod_n(p.row - p.col)]++;
  }
  std::vector<Position> r_tilde;
  for (const Position& p : r_cells) {
    if (rows[p.row - 1] == 1 && cols[p.col - 1] == 1 && tps[mod_n(p.row + p.col)] == 1 &&
        tms[mod_n(p.row - p.col)] == 1) {
      r_tilde.push_back(p);
    }
  }
  rep.r_tilde_size = static_cast<int64_t>(r_tilde.size());

  GreedyOutcome outcome = run_greedy_coupled(grid, stop);
  rep.placed = outcome.placed;
  rep.inclusion_holds = true;
  for (const Position& p : r_tilde) {
    if (!outcome.config.occupied(p)) {
      rep.inclusion_holds = false;
      break;
    }
  }
  if (rep.r_size <= stop && !rep.inclusion_holds) {
    throw std::logic_error("unthreatened core escaped the coupled run despite |R| <= stop");
  }

  // safe-absorber census over a fixed-size deterministic query sample
  constexpr int kQuerySamples = 32;
  Rng qrng(mix_seed(seed, 0x5afec0u));
  rep.safe_counts.samples = kQuerySamples;
  rep.safe_counts.min = std::numeric_limits<int>::max();
  rep.safe_counts.max = 0;
  double total = 0.0;
  for (int i = 0; i < kQuerySamples; ++i) {
    AbsorberQuery q{static_cast<int>(uniform_below(qrng, n)) + 1,
                    static_cast<int>(uniform_below(qrng, n)) + 1};
    int count = static_cast<int>(safe_absorbers(r_tilde, q, n).size());
    rep.safe_counts.min = std::min(rep.safe_counts.min, count);
    rep.safe_counts.max = std::max(rep.safe_counts.max, count);
    total += count;
  }
  rep.safe_counts.mean = total / kQuerySamples;
  return rep;
}

}  // namespace queens
