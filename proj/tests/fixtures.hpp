#pragma once

#include "ahg/classify.hpp"

namespace fixtures {

// Index two along the edge {a1, a4}; not normal.
inline ahg::IntMatrix surface() { return {{1, 1, 1, 1}, {0, 0, 1, 2}, {0, 1, 1, 0}}; }

// Normal, four facets, fourteen classes on [-3,3]^3.
inline ahg::IntMatrix normal3() { return {{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, -1}}; }

// The projective monomial curve with exponents 0, 2, 4, 7, 9.
inline ahg::IntMatrix curve() { return {{1, 1, 1, 1, 1}, {0, 2, 4, 7, 9}}; }

inline ahg::RatVec rv(std::initializer_list<long> xs) {
  ahg::RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace fixtures
