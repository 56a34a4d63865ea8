#include "queens/board.hpp"

#include <stdexcept>
#include <string>

namespace queens {

namespace {

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("board size must be at least 1, got " + std::to_string(n));
}

void check_position(Position p, int n) {
  check_n(n);
  if (p.row < 1 || p.row > n || p.col < 1 || p.col > n) {
    throw std::invalid_argument("position (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                                ") out of range for n=" + std::to_string(n));
  }
}

int mod_n(int v, int n) {
  int m = v % n;
  return m < 0 ? m + n : m;
}

}  // namespace

std::pair<int, int> tor_classes(Position p, int n) {
  check_position(p, n);
  return {mod_n(p.row + p.col, n), mod_n(p.row - p.col, n)};
}

std::pair<int, int> far_segment_sizes(Position p, int n) {
  check_position(p, n);
  int plus = p.row + p.col - (n + 1);
  int minus = p.row - p.col;
  return {plus < 0 ? -plus : plus, minus < 0 ? -minus : minus};
}

std::pair<std::vector<Position>, std::vector<Position>> far_segment_cells(Position p, int n) {
  auto [sum_cls, diff_cls] = tor_classes(p, n);
  std::vector<Position> plus, minus;
  for (int x = 1; x <= n; ++x) {
    int y_plus = mod_n(sum_cls - x, n);
    if (y_plus == 0) y_plus = n;
    if (y_plus >= 1 && y_plus <= n && x + y_plus != p.row + p.col) plus.push_back({x, y_plus});
    int y_minus = mod_n(x - diff_cls, n);
    if (y_minus == 0) y_minus = n;
    if (y_minus >= 1 && y_minus <= n && x - y_minus != p.row - p.col) minus.push_back({x, y_minus});
  }
  return {std::move(plus), std::move(minus)};
}

std::array<LineId, 6> lines_through(Position p, int n) {
  auto [sum_cls, diff_cls] = tor_classes(p, n);
  return {LineId{LineKind::Row, p.row},
          LineId{LineKind::Col, p.col},
          LineId{LineKind::TorDiagPlus, sum_cls},
          LineId{LineKind::TorDiagMinus, diff_cls},
          LineId{LineKind::DiagPlus, p.row + p.col},
          LineId{LineKind::DiagMinus, p.row - p.col}};
}

std::vector<Position> line_positions(LineId line, int n) {
  check_n(n);
  std::vector<Position> out;
  switch (line.kind) {
    case LineKind::Row:
      if (line.index < 1 || line.index > n) throw std::invalid_argument("row index out of range");
      for (int y = 1; y <= n; ++y) out.push_back({line.index, y});
      break;
    case LineKind::Col:
      if (line.index < 1 || line.index > n) throw std::invalid_argument("col index out of range");
      for (int x = 1; x <= n; ++x) out.push_back({x, line.index});
      break;
    case LineKind::TorDiagPlus: {
      if (line.index < 0 || line.index >= n) throw std::invalid_argument("toroidal class out of range");
      for (int x = 1; x <= n; ++x) {
        int y = mod_n(line.index - x, n);
        if (y == 0) y = n;
        out.push_back({x, y});
      }
      break;
    }
    case LineKind::TorDiagMinus: {
      if (line.index < 0 || line.index >= n) throw std::invalid_argument("toroidal class out of range");
      for (int x = 1; x <= n; ++x) {
        int y = mod_n(x - line.index, n);
        if (y == 0) y = n;
        out.push_back({x, y});
      }
      break;
    }
    case LineKind::DiagPlus: {
      if (line.index < 2 || line.index > 2 * n) throw std::invalid_argument("diagonal sum out of range");
      int lo = line.index - n < 1 ? 1 : line.index - n;
      int hi = line.index - 1 > n ? n : line.index - 1;
      for (int x = lo; x <= hi; ++x) out.push_back({x, line.index - x});
      break;
    }
    case LineKind::DiagMinus: {
      if (line.index <= -n || line.index >= n) throw std::invalid_argument("diagonal difference out of range");
      int lo = 1 + line.index > 1 ? 1 + line.index : 1;
      int hi = n + line.index < n ? n + line.index : n;
      for (int x = lo; x <= hi; ++x) out.push_back({x, x - line.index});
      break;
    }
  }
  return out;
}

PartialConfig::PartialConfig(int n) : n_(n) {
  check_n(n);
  row_cnt_.assign(n, 0);
  col_cnt_.assign(n, 0);
  torp_cnt_.assign(n, 0);
  torm_cnt_.assign(n, 0);
  dplus_cnt_.assign(2 * n - 1, 0);
  dminus_cnt_.assign(2 * n - 1, 0);
  row_occ_.assign(n, 0);
}

bool PartialConfig::occupied(Position p) const {
  if (p.row < 1 || p.row > n_ || p.col < 1 || p.col > n_) return false;
  return row_occ_[p.row - 1] == p.col;
}

void PartialConfig::place(Position p, Rule rule) {
  check_position(p, n_);
  if (occupied(p)) {
    throw std::invalid_argument("duplicate position (" + std::to_string(p.row) + "," + std::to_string(p.col) + ")");
  }
  auto [sum_cls, diff_cls] = tor_classes(p, n_);
  bool blocked = row_cnt_[p.row - 1] > 0 || col_cnt_[p.col - 1] > 0;
  if (rule == Rule::Toroidal) {
    blocked = blocked || torp_cnt_[sum_cls] > 0 || torm_cnt_[diff_cls] > 0;
  } else {
    blocked = blocked || dplus_cnt_[p.row + p.col - 2] > 0 || dminus_cnt_[p.row - p.col + n_ - 1] > 0;
  }
  if (blocked) {
    throw std::invalid_argument("position (" + std::to_string(p.row) + "," + std::to_string(p.col) +
                                ") shares a line with an existing queen");
  }
  queens_.push_back(p);
  row_cnt_[p.row - 1]++;
  col_cnt_[p.col - 1]++;
  torp_cnt_[sum_cls]++;
  torm_cnt_[diff_cls]++;
  dplus_cnt_[p.row + p.col - 2]++;
  dminus_cnt_[p.row - p.col + n_ - 1]++;
  row_occ_[p.row - 1] = p.col;
}

void PartialConfig::remove(Position p) {
  check_position(p, n_);
  if (!occupied(p)) {
    throw std::invalid_argument("no queen at (" + std::to_string(p.row) + "," + std::to_string(p.col) + ")");
  }
  for (auto it = queens_.begin(); it != queens_.end(); ++it) {
    if (*it == p) {
      queens_.erase(it);
      break;
    }
  }
  auto [sum_cls, diff_cls] = tor_classes(p, n_);
  row_cnt_[p.row - 1]--;
  col_cnt_[p.col - 1]--;
  torp_cnt_[sum_cls]--;
  torm_cnt_[diff_cls]--;
  dplus_cnt_[p.row + p.col - 2]--;
  dminus_cnt_[p.row - p.col + n_ - 1]--;
  row_occ_[p.row - 1] = 0;
}

std::array<std::vector<int>, 6> PartialConfig::occupancy_tables() const {
  return {row_cnt_, col_cnt_, torp_cnt_, torm_cnt_, dplus_cnt_, dminus_cnt_};
}

bool verify(const PartialConfig& cfg, Rule rule) {
  int n = cfg.n();
  std::vector<int> rows(n, 0), cols(n, 0), d1(2 * n - 1, 0), d2(2 * n - 1, 0);
  for (const Position& q : cfg.queens()) {
    if (++rows[q.row - 1] > 1) return false;
    if (++cols[q.col - 1] > 1) return false;
    if (rule == Rule::Toroidal) {
      auto [sp, sm] = tor_classes(q, n);
      if (++d1[sp] > 1) return false;
      if (++d2[sm] > 1) return false;
    } else {
      if (++d1[q.row + q.col - 2] > 1) return false;
      if (++d2[q.row - q.col + n - 1] > 1) return false;
    }
  }
  return true;
}

std::vector<Position> available_set(const PartialConfig& cfg) {
  int n = cfg.n();
  std::vector<Position> out;
  for (int x = 1; x <= n; ++x) {
    if (cfg.row_count(x) > 0) continue;
    for (int y = 1; y <= n; ++y) {
      if (cfg.col_count(y) > 0) continue;
      auto [sp, sm] = tor_classes({x, y}, n);
      if (cfg.tor_plus_count(sp) == 0 && cfg.tor_minus_count(sm) == 0) out.push_back({x, y});
    }
  }
  return out;
}

}  // namespace queens
