#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "queens/absorb.hpp"
#include "queens/board.hpp"

namespace queens {

// Exhaustive enumerators and definition-literal absorber counters. These
// deliberately share nothing with the optimized modules beyond the Position
// type: all geometry is rederived from scratch so that differential tests
// cannot be fooled by a shared bug.

struct EnumerationResult {
  int n = 0;
  Rule rule = Rule::Classical;
  uint64_t count = 0;
  std::chrono::duration<double> elapsed{0.0};
};

// Exact count of full n-queens configurations by row-by-row backtracking.
// Guarded to n <= 14 unless force is set.
EnumerationResult enumerate_classic(int n, bool force = false);

// Same under the toroidal rule.
EnumerationResult enumerate_toroidal(int n, bool force = false);

// Independent second method: filter all n! column permutations by
// diagonal distinctness. Practical to about n = 10.
uint64_t enumerate_classic_permfilter(int n);

// Definition-literal absorber set: materializes every diagonal as a cell
// set and rechecks the conditions per queen. Guarded to n <= 32.
std::vector<Position> brute_absorbers(const PartialConfig& cfg, AbsorberQuery q);

// Definition-literal safe absorbers: existential search over all
// (a1, a2, b1, b2) tuples drawn from materialized far segments, with full
// line-sharing rechecks. Guarded to n <= 32.
std::vector<Position> brute_safe_absorbers(const std::vector<Position>& r_set, AbsorberQuery q, int n);

}  // namespace queens
