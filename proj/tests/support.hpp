#pragma once

#include <vector>

#include "kedge/geometry.hpp"
#include "oracles.hpp"

namespace test_support {

inline std::vector<kedge::Point> to_points(const std::vector<oracle::P>& in) {
  std::vector<kedge::Point> out;
  for (const auto& [x, y] : in) out.emplace_back(x, y);
  return out;
}

inline std::vector<oracle::P> to_pairs(const std::vector<kedge::Point>& in) {
  std::vector<oracle::P> out;
  for (const auto& p : in) out.emplace_back(p.x, p.y);
  return out;
}

// Convex n-gon on the parabola y = x^2 with x = 2^i. Chord slopes 2^i + 2^j
// are pairwise distinct, so the sweep never meets parallel lines.
inline std::vector<kedge::Point> parabola_polygon(std::size_t n) {
  std::vector<kedge::Point> out;
  for (std::size_t i = 0; i < n; ++i) {
    long v = 1L << i;
    out.emplace_back(kedge::Rational(v), kedge::Rational(v * v));
  }
  return out;
}

}  // namespace test_support
