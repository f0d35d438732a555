#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: plain determinants, direct side counting and the convex
// quadrilateral characterization of crossings.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Q = mpq_class;
using P = std::pair<Q, Q>;

inline int det_sign(const P& a, const P& b, const P& c) {
  Q d = (b.first - a.first) * (c.second - a.second) - (b.second - a.second) * (c.first - a.first);
  return sgn(d);
}

// E_k by counting, for each pair, the points strictly on each side.
inline std::vector<std::int64_t> edge_vector(const std::vector<P>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::int64_t> e(n / 2, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t left = 0;
      for (std::size_t t = 0; t < n; ++t)
        if (t != i && t != j && det_sign(pts[i], pts[j], pts[t]) > 0) ++left;
      std::size_t k = std::min(left, n - 2 - left);
      ++e[k];
    }
  return e;
}

inline bool in_triangle(const P& p, const P& a, const P& b, const P& c) {
  int s1 = det_sign(a, b, p), s2 = det_sign(b, c, p), s3 = det_sign(c, a, p);
  return s1 == s2 && s2 == s3;
}

// Number of 4-subsets in convex position.
inline std::int64_t crossings(const std::vector<P>& pts) {
  const std::size_t n = pts.size();
  std::int64_t total = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d) {
          bool concave = in_triangle(pts[a], pts[b], pts[c], pts[d]) || in_triangle(pts[b], pts[a], pts[c], pts[d]) ||
                         in_triangle(pts[c], pts[a], pts[b], pts[d]) || in_triangle(pts[d], pts[a], pts[b], pts[c]);
          total += !concave;
        }
  return total;
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Integer points in general position with no two spanned lines parallel.
inline std::vector<P> random_points(std::size_t n, std::mt19937_64& rng, long range = 200) {
  std::uniform_int_distribution<long> d(-range, range);
  for (;;) {
    std::vector<P> pts;
    while (pts.size() < n) pts.emplace_back(Q(d(rng)), Q(d(rng)));
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if (pts[i] == pts[j]) ok = false;
        for (std::size_t k = j + 1; k < n && ok; ++k)
          if (det_sign(pts[i], pts[j], pts[k]) == 0) ok = false;
      }
    std::vector<std::pair<Q, Q>> dirs;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j) dirs.emplace_back(pts[j].first - pts[i].first, pts[j].second - pts[i].second);
    for (std::size_t a = 0; a < dirs.size() && ok; ++a)
      for (std::size_t b = a + 1; b < dirs.size() && ok; ++b)
        if (dirs[a].first * dirs[b].second == dirs[a].second * dirs[b].first) ok = false;
    if (ok) return pts;
  }
}

}  // namespace oracle
