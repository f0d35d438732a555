#include "kedge/sampling.hpp"

#include <numeric>
#include <set>

#include "kedge/errors.hpp"

namespace kedge {

namespace {

bool has_parallel_pair(const std::vector<Point>& pts) {
  // canonical direction (dx, dy) reduced by gcd with dx > 0 or dx == 0, dy > 0
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      auto dx = to_int64_exact(pts[j].x - pts[i].x);
      auto dy = to_int64_exact(pts[j].y - pts[i].y);
      auto g = std::gcd(dx, dy);
      dx /= g;
      dy /= g;
      if (dx < 0 || (dx == 0 && dy < 0)) {
        dx = -dx;
        dy = -dy;
      }
      if (!seen.insert({dx, dy}).second) return true;
    }
  return false;
}

}  // namespace

std::vector<Point> random_general_position(std::size_t n, Rng& rng, std::int64_t range,
                                           bool avoid_parallel) {
  std::uniform_int_distribution<std::int64_t> coord(-range, range);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.emplace_back(Rational(coord(rng)), Rational(coord(rng)));
    bool distinct = true;
    for (std::size_t i = 0; i < n && distinct; ++i)
      for (std::size_t j = i + 1; j < n && distinct; ++j) distinct = !(pts[i] == pts[j]);
    if (!distinct || !check_general_position(pts).empty()) continue;
    if (avoid_parallel && has_parallel_pair(pts)) continue;
    return pts;
  }
  throw Error("could not sample a point set in general position");
}

Halfperiod random_halfperiod(std::size_t n, Rng& rng) {
  std::vector<std::size_t> perm(n), positions;
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::size_t> open;
  for (std::size_t step = 0; step < n * (n - 1) / 2; ++step) {
    open.clear();
    for (std::size_t j = 0; j + 1 < n; ++j)
      if (perm[j] < perm[j + 1]) open.push_back(j);
    std::size_t j = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
    std::swap(perm[j], perm[j + 1]);
    positions.push_back(j + 1);
  }
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  return Halfperiod::from_positions(std::move(identity), positions);
}

std::vector<Point> convex_position(std::size_t n) {
  std::vector<Point> pts;
  Integer x = 1;
  for (std::size_t i = 0; i < n; ++i) {
    pts.emplace_back(Rational(x), Rational(x * x));
    x *= 2;
  }
  return pts;
}

}  // namespace kedge
