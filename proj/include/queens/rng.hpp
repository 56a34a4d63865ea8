#pragma once

#include <cstdint>
#include <random>

namespace queens {

// splitmix64 finalizer; used both for seed mixing and as the documented
// per-trial seed derivation f(master_seed, trial_index).
inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t mix_seed(uint64_t master, uint64_t index) {
  return mix64(master + 0x9e3779b97f4a7c15ULL * (index + 1));
}

// std::mt19937_64 is bit-exact across platforms; the std distributions are
// not, so sampling goes through the helpers below.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound), unbiased, via masked rejection.
inline uint64_t uniform_below(Rng& rng, uint64_t bound) {
  if (bound <= 1) return 0;
  uint64_t mask = bound - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    uint64_t v = rng() & mask;
    if (v < bound) return v;
  }
}

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace queens
