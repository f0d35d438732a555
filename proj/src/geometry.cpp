#include "kedge/geometry.hpp"

#include <algorithm>

namespace kedge {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
Rational cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
Rational dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }

int orientation(const Point& p, const Point& q, const Point& r) {
  if (p == q) throw DegenerateInput("degenerate pair");
  Rational det = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
  return sgn(det);
}

Point line_intersection(const Point& a, const Point& b, const Point& c, const Point& d) {
  if (a == b || c == d) throw DegenerateInput("no unique intersection");
  Point r = b - a;
  Point s = d - c;
  Rational den = cross(r, s);
  if (den == 0) throw DegenerateInput("no unique intersection");
  Rational t = cross(c - a, s) / den;
  return a + t * r;
}

bool line_crosses_open_segment(const Point& a, const Point& b, const Point& p, const Point& q) {
  int sp = orientation(a, b, p);
  int sq = orientation(a, b, q);
  return sp != 0 && sq != 0 && sp != sq;
}

std::vector<Triple> check_general_position(std::span<const Point> points) {
  std::vector<Triple> out;
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orientation(points[i], points[j], points[k]) == 0) out.push_back({i, j, k});
  return out;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        throw DegenerateInput("duplicate points at indices " + std::to_string(i) + " and " +
                              std::to_string(j));
  general_position_ = points_.size() < 3 || check_general_position(points_).empty();
}

void PointSet::require_general_position() const {
  if (general_position_) return;
  throw NotInGeneralPosition(check_general_position(points_));
}

Rotation2Pi3::Rotation2Pi3(unsigned digits)
    : digits_(digits), s_(kedge::half_sqrt3(digits)), c_(Rational(3) / (4 * s_)) {}

Point Rotation2Pi3::operator()(const Point& p) const {
  static const Rational half(1, 2);
  return {-half * p.x + c_ * p.y, -s_ * p.x - half * p.y};
}

Point Rotation2Pi3::inverse(const Point& p) const {
  static const Rational half(1, 2);
  return {-half * p.x - c_ * p.y, s_ * p.x - half * p.y};
}

Point rotate_2pi3(const Point& p, unsigned digits) { return Rotation2Pi3(digits)(p); }

OrientationTable::OrientationTable(std::size_t n) : n_(n), signs_(n * n * n, 0) {}

OrientationTable::OrientationTable(std::span<const Point> points)
    : OrientationTable(points.size()) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k)
        set(i, j, k, orientation(points[i], points[j], points[k]));
}

void OrientationTable::set(std::size_t i, std::size_t j, std::size_t k, int s) {
  auto put = [&](std::size_t a, std::size_t b, std::size_t c, int v) {
    signs_[(a * n_ + b) * n_ + c] = static_cast<std::int8_t>(v);
  };
  // even permutations keep the sign, odd ones flip it
  put(i, j, k, s);
  put(j, k, i, s);
  put(k, i, j, s);
  put(j, i, k, -s);
  put(i, k, j, -s);
  put(k, j, i, -s);
}

bool OrientationTable::has_collinear_triple() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k)
        if ((*this)(i, j, k) == 0) return true;
  return false;
}

}  // namespace kedge
