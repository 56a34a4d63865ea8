#include "queens/absorb.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "queens/rng.hpp"

namespace queens {

namespace {

void check_query(AbsorberQuery q, int n) {
  if (q.row < 1 || q.row > n || q.col < 1 || q.col > n) {
    throw std::invalid_argument("query (" + std::to_string(q.row) + "," + std::to_string(q.col) +
                                ") out of range for n=" + std::to_string(n));
  }
}

// Absorber conditions for a single queen, using O(1) occupancy lookups.
// The queen's own contribution to the diagonals through (r,y) and (x,c) is
// discounted: (x,y) lies on a diagonal of (r,y) iff x == r, and on one of
// (x,c) iff y == c.
bool is_absorber(const PartialConfig& cfg, AbsorberQuery q, Position a) {
  if (a.row + a.col == q.row + q.col || a.row - a.col == q.row - q.col) return false;
  int on_ry = a.row == q.row ? 1 : 0;
  int on_xc = a.col == q.col ? 1 : 0;
  return cfg.diag_plus_count(q.row + a.col) == on_ry && cfg.diag_minus_count(q.row - a.col) == on_ry &&
         cfg.diag_plus_count(a.row + q.col) == on_xc && cfg.diag_minus_count(a.row - q.col) == on_xc;
}

int count_absorbers_capped(const PartialConfig& cfg, AbsorberQuery q, int cap) {
  int count = 0;
  for (const Position& a : cfg.queens()) {
    if (is_absorber(cfg, q, a) && ++count >= cap) break;
  }
  return count;
}

bool in_balanced_region(int x, int y, int n) {
  int d = 10 * (x - y);
  if (d <= n && d >= -n) return false;
  int s = 10 * (x + y);
  return s < 9 * n || s > 11 * n;
}

}  // namespace

std::vector<Position> absorbers(const PartialConfig& cfg, AbsorberQuery q) {
  check_query(q, cfg.n());
  std::vector<Position> out;
  for (const Position& a : cfg.queens()) {
    if (is_absorber(cfg, q, a)) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PartialConfig apply_absorber(const PartialConfig& cfg, AbsorberQuery q, Position a) {
  check_query(q, cfg.n());
  if (!cfg.occupied(a) || !is_absorber(cfg, q, a)) {
    throw std::invalid_argument("(" + std::to_string(a.row) + "," + std::to_string(a.col) +
                                ") is not an absorber for the query");
  }
  if (cfg.row_count(q.row) > 0 || cfg.col_count(q.col) > 0) {
    throw std::invalid_argument("query row and column must be uncovered");
  }
  PartialConfig result = cfg;
  result.remove(a);
  result.place({q.row, a.col}, Rule::Classical);
  result.place({a.row, q.col}, Rule::Classical);
  return result;
}

AbsorptionResult run_absorption(const PartialConfig& cfg, uint64_t seed) {
  if (!verify(cfg, Rule::Classical)) {
    throw std::invalid_argument("configuration is not valid under the classical rule");
  }
  int n = cfg.n();
  AbsorptionResult result{false, cfg, {}, -1, {}};
  std::vector<int> rows, cols;
  for (int i = 1; i <= n; ++i) {
    if (cfg.row_count(i) == 0) rows.push_back(i);
    if (cfg.col_count(i) == 0) cols.push_back(i);
  }
  if (rows.size() != cols.size()) {
    throw std::logic_error("uncovered row and column counts differ");
  }
  for (size_t i = 0; i < rows.size(); ++i) {
    result.plan.matching.push_back({rows[i], cols[i]});
  }
  size_t k = result.plan.matching.size();

  // Depth-first search over exchange choices, candidates visited in seeded
  // uniform order. A run that never hits an empty absorber set follows the
  // plain one-pass procedure exactly; dead ends are undone and the next
  // candidate is tried. The exchange count is capped so pathological
  // instances still abort quickly.
  constexpr int64_t kExchangeCap = 200000;
  int64_t exchanges = 0;
  Rng rng(seed);
  struct Frame {
    std::vector<Position> candidates;
    size_t next = 0;
    Position applied;
  };
  std::vector<Frame> stack;
  std::vector<Position> path;
  PartialConfig cur = cfg;
  size_t deepest = 0;

  size_t depth = 0;
  for (;;) {
    if (depth == k) {
      result.completed = true;
      result.config = std::move(cur);
      result.plan.choices = path;
      return result;
    }
    if (stack.size() == depth) {
      Frame f;
      f.candidates = absorbers(cur, result.plan.matching[depth]);
      for (size_t i = f.candidates.size(); i > 1; --i) {
        std::swap(f.candidates[i - 1], f.candidates[uniform_below(rng, i)]);
      }
      stack.push_back(std::move(f));
    }
    Frame& frame = stack[depth];
    if (frame.next < frame.candidates.size() && exchanges < kExchangeCap) {
      Position a = frame.candidates[frame.next++];
      AbsorberQuery q = result.plan.matching[depth];
      cur.remove(a);
      cur.place({q.row, a.col}, Rule::Classical);
      cur.place({a.row, q.col}, Rule::Classical);
      frame.applied = a;
      path.push_back(a);
      ++exchanges;
      ++depth;
      if (depth > deepest) {
        // the frozen state reported on an abort is the first prefix that
        // reached the deepest step
        deepest = depth;
        result.config = cur;
        result.plan.choices = path;
      }
      continue;
    }
    if (depth == 0) {
      result.abort_step = static_cast<int>(deepest) + 1;
      result.abort_query = result.plan.matching[deepest];
      return result;
    }
    stack.pop_back();
    --depth;
    AbsorberQuery q = result.plan.matching[depth];
    Position a = stack[depth].applied;
    cur.remove({q.row, a.col});
    cur.remove({a.row, q.col});
    cur.place(a, Rule::Classical);
    path.pop_back();
  }
}

bool is_ell_absorbing(const PartialConfig& cfg, int ell) {
  if (ell <= 0) return true;
  int n = cfg.n();
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (count_absorbers_capped(cfg, {r, c}, ell) < ell) return false;
    }
  }
  return true;
}

std::vector<Position> safe_absorbers(const std::vector<Position>& r_set, AbsorberQuery q, int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  check_query(q, n);
  std::vector<Position> members = r_set;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const Position& p : members) {
    if (p.row < 1 || p.row > n || p.col < 1 || p.col > n) {
      throw std::invalid_argument("set member out of range");
    }
  }

  auto mod_n = [n](int v) { return ((v % n) + n) % n; };
  std::vector<std::vector<Position>> by_row(n), by_col(n), by_tp(n), by_tm(n);
  for (const Position& p : members) {
    by_row[p.row - 1].push_back(p);
    by_col[p.col - 1].push_back(p);
    by_tp[mod_n(p.row + p.col)].push_back(p);
    by_tm[mod_n(p.row - p.col)].push_back(p);
  }

  // members of R on the far segments of an anchor cell
  auto far_plus = [&](Position anchor) {
    std::vector<Position> out;
    for (const Position& u : by_tp[mod_n(anchor.row + anchor.col)]) {
      if (u.row + u.col != anchor.row + anchor.col) out.push_back(u);
    }
    return out;
  };
  auto far_minus = [&](Position anchor) {
    std::vector<Position> out;
    for (const Position& u : by_tm[mod_n(anchor.row - anchor.col)]) {
      if (u.row - u.col != anchor.row - anchor.col) out.push_back(u);
    }
    return out;
  };

  auto in_five = [](const std::vector<Position>& five, Position v) {
    for (const Position& f : five) {
      if (f == v) return true;
    }
    return false;
  };
  // A witnessing cell can have at most 4 distinct sharers (the other four of
  // the five). Far-segment members pairwise share a toroidal diagonal, so
  // this prune also caps each candidate list at 5 entries.
  auto sharer_overflow = [&](Position u) {
    std::vector<Position> seen;
    auto scan = [&](const std::vector<Position>& bucket) {
      for (const Position& v : bucket) {
        if (v == u || in_five(seen, v)) continue;
        seen.push_back(v);
        if (seen.size() > 4) return true;
      }
      return false;
    };
    return scan(by_row[u.row - 1]) || scan(by_col[u.col - 1]) ||
           scan(by_tp[mod_n(u.row + u.col)]) || scan(by_tm[mod_n(u.row - u.col)]);
  };
  // every member of R sharing a line with u must itself be one of the five
  auto exclusive = [&](const std::vector<Position>& five, Position u) {
    for (const Position& v : by_row[u.row - 1]) {
      if (v != u && !in_five(five, v)) return false;
    }
    for (const Position& v : by_col[u.col - 1]) {
      if (v != u && !in_five(five, v)) return false;
    }
    for (const Position& v : by_tp[mod_n(u.row + u.col)]) {
      if (v != u && !in_five(five, v)) return false;
    }
    for (const Position& v : by_tm[mod_n(u.row - u.col)]) {
      if (v != u && !in_five(five, v)) return false;
    }
    return true;
  };

  auto pruned = [&](std::vector<Position> list) {
    std::erase_if(list, sharer_overflow);
    return list;
  };

  std::vector<Position> out;
  for (const Position& cand : members) {
    if (cand.row + cand.col == q.row + q.col || cand.row - cand.col == q.row - q.col) continue;
    if (sharer_overflow(cand)) continue;
    Position ry{q.row, cand.col}, xc{cand.row, q.col};
    std::vector<Position> a1s = pruned(far_plus(ry)), a2s = pruned(far_minus(ry));
    std::vector<Position> b1s = pruned(far_plus(xc)), b2s = pruned(far_minus(xc));
    if (a1s.empty() || a2s.empty() || b1s.empty() || b2s.empty()) continue;
    bool safe = false;
    for (const Position& a1 : a1s) {
      for (const Position& a2 : a2s) {
        for (const Position& b1 : b1s) {
          for (const Position& b2 : b2s) {
            std::vector<Position> five{cand, a1, a2, b1, b2};
            bool ok = true;
            for (const Position& u : five) {
              if (!exclusive(five, u)) {
                ok = false;
                break;
              }
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

bool is_balanced(Position p, int n) {
  auto [fp, fm] = far_segment_sizes(p, n);
  return 10 * fp >= n && 10 * fm >= n;
}

std::vector<Position> balanced_region(int n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::vector<Position> out;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (in_balanced_region(x, y, n)) out.push_back({x, y});
    }
  }
  return out;
}

int64_t balanced_pair_count(int n, AbsorberQuery q) {
  check_query(q, n);
  auto mod_n = [n](int v) { return ((v % n) + n) % n; };
  int qp = mod_n(q.row + q.col), qm = mod_n(q.row - q.col);
  int64_t count = 0;
  for (int x = 1; x <= n; ++x) {
    if (x == q.row) continue;
    bool xc_in_s = in_balanced_region(x, q.col, n);
    if (!xc_in_s) continue;
    for (int y = 1; y <= n; ++y) {
      if (y == q.col) continue;
      if (mod_n(x + y) == qp || mod_n(x - y) == qm) continue;
      if (in_balanced_region(q.row, y, n)) ++count;
    }
  }
  return count;
}

}  // namespace queens
