#pragma once

// Dense exact linear algebra over Q, used for fixed-space dimensions.

#include <vector>

#include "hecke/qpoly.hpp"

namespace hecke {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Rank by Gaussian elimination over Q.
int rank(RationalMatrix rows);

}  // namespace hecke
