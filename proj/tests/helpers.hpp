#pragma once

#include <stdexcept>
#include <vector>

#include "queens/board.hpp"
#include "queens/rng.hpp"

namespace queens::testing {

// Random valid partial configuration: visits cells in random order and
// keeps every one that the rule admits, until max_size queens are placed.
// Independent of the greedy engine on purpose.
inline PartialConfig random_partial_config(int n, Rule rule, int max_size, Rng& rng) {
  std::vector<Position> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) cells.push_back({x, y});
  }
  for (size_t i = cells.size(); i > 1; --i) {
    std::swap(cells[i - 1], cells[uniform_below(rng, i)]);
  }
  PartialConfig cfg(n);
  for (const Position& p : cells) {
    if (cfg.size() >= max_size) break;
    try {
      cfg.place(p, rule);
    } catch (const std::invalid_argument&) {
    }
  }
  return cfg;
}

// Brute-force availability filter, the from-scratch rebuild used in audits.
inline std::vector<Position> brute_available(const PartialConfig& cfg) {
  int n = cfg.n();
  std::vector<Position> out;
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      bool free = cfg.row_count(x) == 0 && cfg.col_count(y) == 0;
      if (free) {
        auto [sp, sm] = tor_classes({x, y}, n);
        free = cfg.tor_plus_count(sp) == 0 && cfg.tor_minus_count(sm) == 0;
      }
      if (free) out.push_back({x, y});
    }
  }
  return out;
}

}  // namespace queens::testing
