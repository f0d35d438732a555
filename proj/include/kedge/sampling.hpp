#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "kedge/geometry.hpp"
#include "kedge/halfperiod.hpp"

namespace kedge {

using Rng = std::mt19937_64;

/// Integer points in [-range, range]^2 with no three collinear and, if
/// requested, no two spanned lines parallel (rejection sampling).
std::vector<Point> random_general_position(std::size_t n, Rng& rng, std::int64_t range = 1000,
                                           bool avoid_parallel = true);

/// A uniformly chosen swap among the non-inverted adjacent pairs at each
/// step; always a valid halfperiod starting at the identity.
Halfperiod random_halfperiod(std::size_t n, Rng& rng);

/// (2^i, 4^i): convex position with pairwise distinct slopes.
std::vector<Point> convex_position(std::size_t n);

}  // namespace kedge
