#pragma once

#include <gkzhodge/linalg.hpp>

#include <random>
#include <vector>

namespace gkz::test {

inline IntVec v(std::initializer_list<long> xs) { return to_intvec(xs); }

// Deterministic generator for the property tests.
inline std::mt19937& rng() {
  static std::mt19937 gen(20240917u);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

}  // namespace gkz::test
