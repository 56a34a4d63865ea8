#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace queens {

// A board square. Coordinates are 1-based: row, col in [1..n].
struct Position {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Position&, const Position&) = default;
};

enum class Rule { Toroidal, Classical };

enum class LineKind { Row, Col, TorDiagPlus, TorDiagMinus, DiagPlus, DiagMinus };

// One line of the board. Index ranges by kind:
//   Row, Col                   1..n
//   TorDiagPlus, TorDiagMinus  residue class 0..n-1
//   DiagPlus                   exact sum row+col, 2..2n
//   DiagMinus                  exact difference row-col, -(n-1)..n-1
struct LineId {
  LineKind kind = LineKind::Row;
  int index = 0;
  friend auto operator<=>(const LineId&, const LineId&) = default;
};

// Toroidal diagonal classes of p: ((row+col) mod n, (row-col) mod n),
// both normalized to [0..n-1].
std::pair<int, int> tor_classes(Position p, int n);

// Sizes of the two far segments (toroidal diagonal through p minus the
// ordinary diagonal through p): (|row+col-(n+1)|, |row-col|).
std::pair<int, int> far_segment_sizes(Position p, int n);

// The far segments themselves, materialized cell by cell.
std::pair<std::vector<Position>, std::vector<Position>> far_segment_cells(Position p, int n);

// The six lines through p, in LineKind declaration order.
std::array<LineId, 6> lines_through(Position p, int n);

// All member positions of a line, ordered by row.
std::vector<Position> line_positions(LineId line, int n);

// A set of queens with per-line occupant counts for all six line families.
// Counts for all families are maintained regardless of the rule used to
// place, so a toroidally built configuration can be interrogated about
// ordinary diagonals without recomputation.
class PartialConfig {
 public:
  explicit PartialConfig(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(queens_.size()); }
  // Placement order is preserved; for configurations built by a seeded
  // process this makes the queen list itself replayable.
  const std::vector<Position>& queens() const { return queens_; }

  bool occupied(Position p) const;
  int row_count(int row) const { return row_cnt_[row - 1]; }
  int col_count(int col) const { return col_cnt_[col - 1]; }
  int tor_plus_count(int cls) const { return torp_cnt_[cls]; }
  int tor_minus_count(int cls) const { return torm_cnt_[cls]; }
  int diag_plus_count(int sum) const { return dplus_cnt_[sum - 2]; }
  int diag_minus_count(int diff) const { return dminus_cnt_[diff + n_ - 1]; }

  // Column of the queen in `row`, or 0 when the row is uncovered.
  int row_occupant(int row) const { return row_occ_[row - 1]; }

  // Adds a queen. Throws std::invalid_argument if p is out of range, is a
  // duplicate, or shares a line relevant to `rule` with an existing queen.
  void place(Position p, Rule rule);

  // Removes a queen; throws if absent.
  void remove(Position p);

  // Occupant count per family indexed from zero, for audits.
  std::array<std::vector<int>, 6> occupancy_tables() const;

 private:
  int n_;
  std::vector<Position> queens_;
  std::vector<int> row_cnt_, col_cnt_, torp_cnt_, torm_cnt_, dplus_cnt_, dminus_cnt_;
  std::vector<int> row_occ_;
};

// True iff every line relevant to `rule` holds at most one queen.
// Recomputed from the queen list alone; total function.
bool verify(const PartialConfig& cfg, Rule rule);

// Positions whose row, column, and both toroidal diagonal classes are
// unoccupied, ordered by (row, col).
std::vector<Position> available_set(const PartialConfig& cfg);

}  // namespace queens
