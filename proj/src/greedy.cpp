#include "queens/greedy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "queens/rng.hpp"

namespace queens {

namespace {

// Explicit index of available cells: O(1) membership, O(1) swap-removal,
// O(1) uniform access by slot. Cells are packed as (row-1)*n + (col-1).
// Placement removes at most four lines' worth of candidates, so the
// worst-case update is O(n).
struct AvailIndex {
  int n;
  std::vector<uint32_t> cells;
  std::vector<int32_t> slot;
  std::vector<int32_t> s_row, s_col, s_tp, s_tm;  // available cells per line

  explicit AvailIndex(int n_) : n(n_) {
    size_t total = static_cast<size_t>(n) * n;
    cells.resize(total);
    slot.resize(total);
    for (size_t i = 0; i < total; ++i) {
      cells[i] = static_cast<uint32_t>(i);
      slot[i] = static_cast<int32_t>(i);
    }
    s_row.assign(n, n);
    s_col.assign(n, n);
    s_tp.assign(n, n);
    s_tm.assign(n, n);
  }

  size_t count() const { return cells.size(); }

  void remove_cell(uint32_t cell) {
    int32_t s = slot[cell];
    if (s < 0) return;
    uint32_t last = cells.back();
    cells[s] = last;
    slot[last] = s;
    cells.pop_back();
    slot[cell] = -1;
    int x = static_cast<int>(cell) / n;
    int y = static_cast<int>(cell) % n;
    s_row[x]--;
    s_col[y]--;
    s_tp[(x + y + 2) % n]--;
    s_tm[((x - y) % n + n) % n]--;
  }

  // Removes every still-available cell of the four toroidal-rule lines
  // through (x0, y0), 0-based.
  void remove_lines(int x0, int y0) {
    for (int y = 0; y < n; ++y) remove_cell(static_cast<uint32_t>(x0) * n + y);
    for (int x = 0; x < n; ++x) remove_cell(static_cast<uint32_t>(x) * n + y0);
    int sp = (x0 + y0 + 2) % n;
    for (int x = 0; x < n; ++x) {
      int y = ((sp - (x + 1)) % n + n) % n;  // 1-based col class member
      y = (y == 0 ? n : y) - 1;
      remove_cell(static_cast<uint32_t>(x) * n + y);
    }
    int sm = ((x0 - y0) % n + n) % n;
    for (int x = 0; x < n; ++x) {
      int y = (((x + 1) - sm) % n + n) % n;
      y = (y == 0 ? n : y) - 1;
      remove_cell(static_cast<uint32_t>(x) * n + y);
    }
  }
};

void record_step(const AvailIndex& idx, const PartialConfig& cfg, Trajectory& traj, bool record_lines) {
  traj.available.push_back(static_cast<int64_t>(idx.count()));
  if (!record_lines) return;
  int n = idx.n;
  std::vector<int32_t> row(4 * n);
  LineStepStats st;
  st.min_s = n + 1;
  st.max_s = -1;
  double sum = 0.0;
  int unocc = 0;
  auto visit = [&](int offset, const std::vector<int32_t>& s, auto occupied) {
    for (int i = 0; i < n; ++i) {
      if (occupied(i)) {
        row[offset + i] = -1;
        continue;
      }
      int32_t v = s[i];
      row[offset + i] = v;
      st.min_s = std::min(st.min_s, v);
      st.max_s = std::max(st.max_s, v);
      sum += v;
      ++unocc;
    }
  };
  visit(0, idx.s_row, [&](int i) { return cfg.row_count(i + 1) > 0; });
  visit(n, idx.s_col, [&](int i) { return cfg.col_count(i + 1) > 0; });
  visit(2 * n, idx.s_tp, [&](int i) { return cfg.tor_plus_count(i) > 0; });
  visit(3 * n, idx.s_tm, [&](int i) { return cfg.tor_minus_count(i) > 0; });
  if (unocc == 0) {
    st.min_s = st.max_s = 0;
    st.mean_s = 0.0;
  } else {
    st.mean_s = sum / unocc;
  }
  traj.line_stats.push_back(st);
  traj.line_s.push_back(std::move(row));
}

void validate(int n, int stop) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (stop < 0 || stop > n) throw std::invalid_argument("stop must satisfy 0 <= stop <= n");
}

}  // namespace

int default_stop(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  // guard against pow() landing a hair above an exact integer power
  int holes = static_cast<int>(std::ceil(std::pow(static_cast<double>(n), 0.7) - 1e-9));
  int stop = n - holes;
  return stop < 1 ? 1 : stop;
}

int stop_from_alpha(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (alpha <= 0.0) throw std::invalid_argument("alpha must be positive");
  double t = (1.0 - std::pow(static_cast<double>(n), -alpha)) * n;
  int stop = static_cast<int>(std::floor(t));
  if (stop < 0) stop = 0;
  if (stop > n) stop = n;
  return stop;
}

GreedyOutcome run_greedy(const GreedyParams& params) {
  validate(params.n, params.stop);
  int n = params.n;
  GreedyOutcome out{PartialConfig(n), 0, false, {}};
  out.trajectory.n = n;
  out.trajectory.has_line_records = params.record_lines;
  AvailIndex idx(n);
  Rng rng(params.seed);
  for (int t = 0; t < params.stop; ++t) {
    if (idx.count() == 0) break;
    record_step(idx, out.config, out.trajectory, params.record_lines);
    uint32_t cell = idx.cells[uniform_below(rng, idx.count())];
    int x0 = static_cast<int>(cell) / n;
    int y0 = static_cast<int>(cell) % n;
    out.config.place({x0 + 1, y0 + 1}, Rule::Toroidal);
    idx.remove_lines(x0, y0);
    out.placed++;
  }
  out.aborted = out.placed < params.stop;
  return out;
}

RankGrid make_rank_grid(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  RankGrid grid;
  grid.n = n;
  grid.rank.resize(static_cast<size_t>(n) * n);
  Rng rng(seed);
  for (double& r : grid.rank) r = uniform_unit(rng);
  return grid;
}

GreedyOutcome run_greedy_coupled(const RankGrid& grid, int stop) {
  int n = grid.n;
  validate(n, stop);
  if (grid.rank.size() != static_cast<size_t>(n) * n) {
    throw std::invalid_argument("rank grid is incomplete");
  }
  std::vector<uint32_t> order(grid.rank.size());
  std::iota(order.begin(), order.end(), 0u);
  // ties broken by cell index, i.e. lexicographic (row, col)
  std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
    if (grid.rank[a] != grid.rank[b]) return grid.rank[a] < grid.rank[b];
    return a < b;
  });

  GreedyOutcome out{PartialConfig(n), 0, false, {}};
  out.trajectory.n = n;
  AvailIndex idx(n);
  size_t ptr = 0;
  for (int t = 0; t < stop; ++t) {
    if (idx.count() == 0) break;
    record_step(idx, out.config, out.trajectory, false);
    while (ptr < order.size() && idx.slot[order[ptr]] < 0) ++ptr;
    uint32_t cell = order[ptr];
    int x0 = static_cast<int>(cell) / n;
    int y0 = static_cast<int>(cell) % n;
    out.config.place({x0 + 1, y0 + 1}, Rule::Toroidal);
    idx.remove_lines(x0, y0);
    out.placed++;
  }
  out.aborted = out.placed < stop;
  return out;
}

bool step_change_audit(const GreedyOutcome& outcome) {
  const Trajectory& traj = outcome.trajectory;
  if (!traj.has_line_records) throw std::invalid_argument("run kept no line records");
  for (size_t t = 0; t + 1 < traj.line_s.size(); ++t) {
    const auto& a = traj.line_s[t];
    const auto& b = traj.line_s[t + 1];
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] < 0 || b[i] < 0) continue;  // occupied at t or t+1
      int32_t d = a[i] - b[i];
      if (d > 4 || d < -4) return false;
    }
  }
  return true;
}

}  // namespace queens
