#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "kedge/errors.hpp"
#include "kedge/rational.hpp"

namespace kedge {

/// A planar point with exact rational coordinates. The optional label is
/// carried along for bookkeeping and never takes part in comparisons.
struct Point {
  Rational x;
  Rational y;
  std::string label;

  Point() = default;
  Point(Rational x_, Rational y_, std::string label_ = {})
      : x(std::move(x_)), y(std::move(y_)), label(std::move(label_)) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);
Rational cross(const Point& u, const Point& v);
Rational dot(const Point& u, const Point& v);

/// Sign of det(q - p, r - p): +1 when r is strictly left of p->q, -1 when
/// strictly right, 0 when collinear. Throws DegenerateInput if p == q.
int orientation(const Point& p, const Point& q, const Point& r);

/// Intersection of the lines ab and cd. Throws DegenerateInput if a == b,
/// c == d, or the lines are parallel.
Point line_intersection(const Point& a, const Point& b, const Point& c, const Point& d);

/// True when the line through a and b meets the open segment (p, q) in its
/// relative interior, i.e. p and q lie strictly on opposite sides.
bool line_crosses_open_segment(const Point& a, const Point& b, const Point& p, const Point& q);

/// All collinear index triples (i < j < k).
std::vector<Triple> check_general_position(std::span<const Point> points);

/// Ordered collection of distinct points with a verified general-position flag.
class PointSet {
 public:
  PointSet() = default;
  /// Throws DegenerateInput if two points coincide.
  explicit PointSet(std::vector<Point> points);

  const std::vector<Point>& points() const { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const { return points_.size(); }
  bool general_position() const { return general_position_; }

  /// Throws NotInGeneralPosition listing every collinear triple.
  void require_general_position() const;

 private:
  std::vector<Point> points_;
  bool general_position_ = false;
};

/// Rational stand-in for the clockwise rotation by 2*pi/3 about the origin.
///
/// The matrix is M R M^-1 where R = [[-1, 1], [-1, 0]] is the integer
/// clockwise rotation of the hexagonal lattice and M maps lattice to
/// Cartesian coordinates using a rational s ~ sqrt(3)/2. It differs from
/// the true rotation by O(10^-digits), has determinant 1 and satisfies
/// theta^3 = identity exactly.
class Rotation2Pi3 {
 public:
  explicit Rotation2Pi3(unsigned digits = 40);

  Point operator()(const Point& p) const;
  Point inverse(const Point& p) const;
  const Rational& half_sqrt3() const { return s_; }
  unsigned digits() const { return digits_; }

 private:
  unsigned digits_;
  Rational s_;
  Rational c_;  // 3 / (4 s)
};

Point rotate_2pi3(const Point& p, unsigned digits = 40);

/// Orientation signs of all triples of a point set (or of an abstract order
/// type), computed once with exact predicates.
class OrientationTable {
 public:
  explicit OrientationTable(std::span<const Point> points);
  /// Builds from a callback giving the sign for i < j < k.
  template <class F>
  static OrientationTable from_sorted_triples(std::size_t n, F&& sign_of) {
    OrientationTable t(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) t.set(i, j, k, static_cast<int>(sign_of(i, j, k)));
    return t;
  }

  std::size_t size() const { return n_; }
  int operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return signs_[(i * n_ + j) * n_ + k];
  }
  bool has_collinear_triple() const;

 private:
  explicit OrientationTable(std::size_t n);
  void set(std::size_t i, std::size_t j, std::size_t k, int s);

  std::size_t n_ = 0;
  std::vector<std::int8_t> signs_;
};

}  // namespace kedge
