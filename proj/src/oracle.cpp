#include "queens/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace queens {

namespace {

void check_guard(int n, int limit, bool force) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > limit && !force) {
    throw std::invalid_argument("n=" + std::to_string(n) + " exceeds the oracle guard of " +
                                std::to_string(limit) + "; pass force (--force) to override");
  }
}

uint64_t count_classic(int n) {
  std::vector<char> cols(n, 0), dp(2 * n - 1, 0), dm(2 * n - 1, 0);
  uint64_t count = 0;
  auto recurse = [&](auto&& self, int row) -> void {
    if (row == n) {
      ++count;
      return;
    }
    for (int col = 0; col < n; ++col) {
      int s = row + col, d = row - col + n - 1;
      if (cols[col] || dp[s] || dm[d]) continue;
      cols[col] = dp[s] = dm[d] = 1;
      self(self, row + 1);
      cols[col] = dp[s] = dm[d] = 0;
    }
  };
  recurse(recurse, 0);
  return count;
}

uint64_t count_toroidal(int n) {
  std::vector<char> cols(n, 0), tp(n, 0), tm(n, 0);
  uint64_t count = 0;
  auto recurse = [&](auto&& self, int row) -> void {
    if (row == n) {
      ++count;
      return;
    }
    for (int col = 0; col < n; ++col) {
      int s = (row + col) % n, d = ((row - col) % n + n) % n;
      if (cols[col] || tp[s] || tm[d]) continue;
      cols[col] = tp[s] = tm[d] = 1;
      self(self, row + 1);
      cols[col] = tp[s] = tm[d] = 0;
    }
  };
  recurse(recurse, 0);
  return count;
}

// Cells of the ordinary diagonals through (row, col), derived by scanning
// the full board rather than by any closed form.
std::vector<Position> diag_cells_plus(int row, int col, int n) {
  std::vector<Position> out;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (x + y == row + col) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<Position> diag_cells_minus(int row, int col, int n) {
  std::vector<Position> out;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (x - y == row - col) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<Position> tor_cells_plus(int row, int col, int n) {
  std::vector<Position> out;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if ((x + y) % n == (row + col) % n) out.push_back({x, y});
    }
  }
  return out;
}

std::vector<Position> tor_cells_minus(int row, int col, int n) {
  std::vector<Position> out;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (((x - y) % n + n) % n == ((row - col) % n + n) % n) out.push_back({x, y});
    }
  }
  return out;
}

bool contains(const std::vector<Position>& cells, Position p) {
  return std::find(cells.begin(), cells.end(), p) != cells.end();
}

bool any_queen_on(const std::vector<Position>& cells, const std::vector<Position>& queens, Position skip) {
  for (const Position& q : queens) {
    if (q == skip) continue;
    if (contains(cells, q)) return true;
  }
  return false;
}

bool share_line(Position a, Position b, int n) {
  if (a.row == b.row || a.col == b.col) return true;
  if ((a.row + a.col) % n == (b.row + b.col) % n) return true;
  return ((a.row - a.col) % n + n) % n == ((b.row - b.col) % n + n) % n;
}

}  // namespace

EnumerationResult enumerate_classic(int n, bool force) {
  check_guard(n, 14, force);
  EnumerationResult res;
  res.n = n;
  res.rule = Rule::Classical;
  auto start = std::chrono::steady_clock::now();
  res.count = count_classic(n);
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

EnumerationResult enumerate_toroidal(int n, bool force) {
  check_guard(n, 14, force);
  EnumerationResult res;
  res.n = n;
  res.rule = Rule::Toroidal;
  auto start = std::chrono::steady_clock::now();
  res.count = count_toroidal(n);
  res.elapsed = std::chrono::steady_clock::now() - start;
  return res;
}

uint64_t enumerate_classic_permfilter(int n) {
  check_guard(n, 12, false);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  uint64_t count = 0;
  std::vector<char> dp(2 * n - 1), dm(2 * n - 1);
  do {
    std::fill(dp.begin(), dp.end(), 0);
    std::fill(dm.begin(), dm.end(), 0);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      int s = i + perm[i], d = i - perm[i] + n - 1;
      if (dp[s] || dm[d]) ok = false;
      dp[s] = dm[d] = 1;
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::vector<Position> brute_absorbers(const PartialConfig& cfg, AbsorberQuery q) {
  int n = cfg.n();
  check_guard(n, 32, false);
  if (q.row < 1 || q.row > n || q.col < 1 || q.col > n) throw std::invalid_argument("query out of range");
  const std::vector<Position>& queens = cfg.queens();
  std::vector<Position> rc_plus = diag_cells_plus(q.row, q.col, n);
  std::vector<Position> rc_minus = diag_cells_minus(q.row, q.col, n);
  std::vector<Position> out;
  for (const Position& a : queens) {
    if (contains(rc_plus, a) || contains(rc_minus, a)) continue;
    Position ry{q.row, a.col}, xc{a.row, q.col};
    if (any_queen_on(diag_cells_plus(ry.row, ry.col, n), queens, a)) continue;
    if (any_queen_on(diag_cells_minus(ry.row, ry.col, n), queens, a)) continue;
    if (any_queen_on(diag_cells_plus(xc.row, xc.col, n), queens, a)) continue;
    if (any_queen_on(diag_cells_minus(xc.row, xc.col, n), queens, a)) continue;
    out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Position> brute_safe_absorbers(const std::vector<Position>& r_set, AbsorberQuery q, int n) {
  check_guard(n, 32, false);
  if (q.row < 1 || q.row > n || q.col < 1 || q.col > n) throw std::invalid_argument("query out of range");
  std::vector<Position> members = r_set;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  std::vector<Position> rc_plus = diag_cells_plus(q.row, q.col, n);
  std::vector<Position> rc_minus = diag_cells_minus(q.row, q.col, n);

  // far segment of an anchor: toroidal diagonal minus the ordinary one,
  // restricted to members of R
  auto far_members = [&](std::vector<Position> tor, const std::vector<Position>& ord) {
    std::vector<Position> out;
    for (const Position& cell : tor) {
      if (!contains(ord, cell) && contains(members, cell)) out.push_back(cell);
    }
    return out;
  };

  std::vector<Position> out;
  for (const Position& cand : members) {
    if (contains(rc_plus, cand) || contains(rc_minus, cand)) continue;
    Position ry{q.row, cand.col}, xc{cand.row, q.col};
    std::vector<Position> a1s = far_members(tor_cells_plus(ry.row, ry.col, n), diag_cells_plus(ry.row, ry.col, n));
    std::vector<Position> a2s = far_members(tor_cells_minus(ry.row, ry.col, n), diag_cells_minus(ry.row, ry.col, n));
    std::vector<Position> b1s = far_members(tor_cells_plus(xc.row, xc.col, n), diag_cells_plus(xc.row, xc.col, n));
    std::vector<Position> b2s = far_members(tor_cells_minus(xc.row, xc.col, n), diag_cells_minus(xc.row, xc.col, n));
    bool safe = false;
    for (const Position& a1 : a1s) {
      for (const Position& a2 : a2s) {
        for (const Position& b1 : b1s) {
          for (const Position& b2 : b2s) {
            std::vector<Position> five{cand, a1, a2, b1, b2};
            bool ok = true;
            for (const Position& v : members) {
              if (contains(five, v)) continue;
              for (const Position& u : five) {
                if (share_line(v, u, n)) {
                  ok = false;
                  break;
                }
              }
              if (!ok) break;
            }
            if (ok) {
              safe = true;
              goto done;
            }
          }
        }
      }
    }
  done:
    if (safe) out.push_back(cand);
  }
  return out;
}

}  // namespace queens
