#include <doctest.h>

#include <random>

#include "kedge/constructions.hpp"
#include "kedge/geometry.hpp"
#include "support.hpp"

using namespace kedge;

TEST_CASE("orientation on small configurations") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {0, 1}, {1, 0}) == -1);
  CHECK(orientation({0, 0}, {1, 0}, {2, 0}) == 0);
  CHECK_THROWS_AS(orientation({1, 1}, {1, 1}, {0, 0}), DegenerateInput);
}

TEST_CASE("orientation of a_1, a_2, a_3 agrees with an independent determinant") {
  // 64-bit evaluation of the same determinant
  long long ax = -700, ay = -50, bx = -410, by = 150, cx = -436, cy = 144;
  long long det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  CHECK(det == 3460);
  CHECK(orientation({-700, -50}, {-410, 150}, {-436, 144}) == 1);
}

TEST_CASE("line_intersection") {
  Point x = line_intersection({0, 0}, {1, 1}, {0, 1}, {1, 0});
  CHECK(x == Point(Rational(1, 2), Rational(1, 2)));
  CHECK(line_intersection({0, 0}, {2, 0}, {1, -1}, {1, 1}) == Point(1, 0));
  CHECK_THROWS_AS(line_intersection({0, 0}, {1, 0}, {0, 1}, {1, 1}), DegenerateInput);
  CHECK_THROWS_AS(line_intersection({0, 0}, {0, 0}, {0, 1}, {1, 1}), DegenerateInput);
}

TEST_CASE("line_intersection on the S_3 coordinates matches Cramer's rule") {
  auto raw = build_sr(SrConfig{}).raw;
  auto find = [&](const std::string& label) {
    for (const auto& p : raw.points)
      if (p.label == label) return p;
    FAIL("missing label " << label);
    return Point{};
  };
  Point a2 = find("a_2"), a3 = find("a_3"), b2 = find("a'_2"), b3 = find("a'_3");
  // solve (b3 - b2) s - (a3 - a2) t = a2 - b2 by Cramer's rule
  Rational m11 = b3.x - b2.x, m12 = -(a3.x - a2.x), m21 = b3.y - b2.y, m22 = -(a3.y - a2.y);
  Rational r1 = a2.x - b2.x, r2 = a2.y - b2.y;
  Rational det = m11 * m22 - m12 * m21;
  REQUIRE(det != 0);
  Rational s = (r1 * m22 - m12 * r2) / det;
  Point expect(b2.x + s * (b3.x - b2.x), b2.y + s * (b3.y - b2.y));
  CHECK(line_intersection(b2, b3, a2, a3) == expect);
}

TEST_CASE("line_crosses_open_segment") {
  CHECK(line_crosses_open_segment({0, 0}, {1, 0}, {5, -1}, {5, 1}));
  CHECK_FALSE(line_crosses_open_segment({0, 0}, {1, 0}, {5, 0}, {5, 1}));
  CHECK_FALSE(line_crosses_open_segment({0, 0}, {1, 0}, {5, 2}, {5, 1}));
}

TEST_CASE("check_general_position lists collinear triples") {
  std::vector<Point> tri{{0, 0}, {1, 0}, {0, 1}};
  CHECK(check_general_position(tri).empty());
  std::vector<Point> line{{0, 0}, {1, 0}, {2, 0}};
  auto t = check_general_position(line);
  REQUIRE(t.size() == 1);
  CHECK(t[0] == Triple{0, 1, 2});
  CHECK_FALSE(check_general_position(build_sr(SrConfig{}).raw.points).empty());
}

TEST_CASE("PointSet rejects duplicates and reports general position") {
  CHECK_THROWS_AS(PointSet({{0, 0}, {1, 1}, {0, 0}}), DegenerateInput);
  PointSet good({{0, 0}, {1, 0}, {0, 1}});
  CHECK(good.general_position());
  PointSet bad({{0, 0}, {1, 0}, {2, 0}, {0, 1}});
  CHECK_FALSE(bad.general_position());
  CHECK_THROWS_AS(bad.require_general_position(), NotInGeneralPosition);
  try {
    bad.require_general_position();
  } catch (const NotInGeneralPosition& e) {
    CHECK(e.triples().size() == 1);
  }
}

TEST_CASE("rotation by 2pi/3") {
  Rotation2Pi3 th(40);
  Point e = th({1, 0});
  CHECK(std::abs(e.x.get_d() + 0.5) < 1e-12);
  CHECK(std::abs(e.y.get_d() + std::sqrt(3.0) / 2) < 1e-12);
  CHECK(th({0, 0}) == Point(0, 0));
  Point p(-700, -50);
  CHECK(th(th(th(p))) == p);
  CHECK(th.inverse(th(p)) == p);
  CHECK(th(th(p)) == th.inverse(p));
  // determinant one: unit square area is preserved
  Point u = th({1, 0}), v = th({0, 1});
  CHECK(cross(u, v) == 1);
}

TEST_CASE("OrientationTable is alternating and matches the predicate") {
  std::mt19937_64 rng(7);
  auto pts = test_support::to_points(oracle::random_points(8, rng));
  OrientationTable t(pts);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j)
      for (std::size_t k = 0; k < 8; ++k) {
        if (i == j || j == k || i == k) continue;
        CHECK(t(i, j, k) == orientation(pts[i], pts[j], pts[k]));
        CHECK(t(i, j, k) == -t(j, i, k));
        CHECK(t(i, j, k) == t(j, k, i));
      }
  CHECK_FALSE(t.has_collinear_triple());
}
