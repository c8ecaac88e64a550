#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "neurideal/field.hpp"

namespace neurideal {

/// Dense integer matrix, row-major. Boundary matrices only hold 0 and ±1.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// Rank over F2 by bit-packed Gaussian elimination (entries reduced mod 2).
std::size_t rank_f2(const IntMatrix& m);

/// Exact rank over Q by fraction Gaussian elimination.
std::size_t rank_rational(const IntMatrix& m);

std::size_t rank(const IntMatrix& m, Field f);

}  // namespace neurideal
