#include <doctest.h>

#include <random>

#include "kedge/edge_stats.hpp"
#include "kedge/sampling.hpp"
#include "support.hpp"

using namespace kedge;

namespace {

using V = std::vector<std::int64_t>;

// E_k straight from the slots of a halfperiod: a swap at slot j is a k-edge for k = min(j, n-j) - 1.
V slot_count(const Halfperiod& h) {
  V e(h.n() / 2, 0);
  for (auto j : h.positions()) ++e[std::min(j, h.n() - j) - 1];
  return e;
}

}  // namespace

TEST_CASE("edge vectors of convex polygons") {
  CHECK(edge_vector_bruteforce(test_support::parabola_polygon(4)).counts == V{4, 2});
  CHECK(edge_vector_bruteforce(test_support::parabola_polygon(6)).counts == V{6, 6, 3});
  CHECK(edge_vector_from_halfperiod(halfperiod_from_points(test_support::parabola_polygon(6))).counts == V{6, 6, 3});
}

TEST_CASE("prefix sums and tails") {
  EdgeVector v{6, {6, 6, 3}};
  CHECK(v.leq() == V{6, 12, 15});
  CHECK(v.geq(1) == 9);
  CHECK(v.total() == 15);
  CHECK(v.halving_lines() == 3);
  CHECK_NOTHROW(v.require_consistent());
  EdgeVector bad{6, {6, 6, 2}};
  CHECK_THROWS(bad.require_consistent());
}

TEST_CASE("both edge-vector routes agree with the side-counting oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    auto raw = oracle::random_points(10, rng);
    auto pts = test_support::to_points(raw);
    auto expect = oracle::edge_vector(raw);
    CHECK(edge_vector_bruteforce(pts).counts == expect);
    CHECK(edge_vector_from_halfperiod(halfperiod_from_points(pts)).counts == expect);
  }
}

TEST_CASE("abstract halfperiods count every pair once") {
  Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    auto h = random_halfperiod(5, rng);
    auto v = edge_vector_from_halfperiod(h);
    CHECK(v.counts == slot_count(h));
    CHECK(v.total() == 10);
  }
}

TEST_CASE("crossings of small sets") {
  CHECK(crossings_bruteforce(test_support::parabola_polygon(4)) == 1);
  std::vector<Point> inner{{0, 0}, {10, 0}, {0, 10}, {2, 3}};
  CHECK(crossings_bruteforce(inner) == 0);
  CHECK(crossings_bruteforce(test_support::parabola_polygon(6)) == 15);
}

TEST_CASE("crossings agree with the convex-quadrilateral oracle, threaded or not") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 20; ++trial) {
    auto raw = oracle::random_points(10, rng);
    auto pts = test_support::to_points(raw);
    auto expect = oracle::crossings(raw);
    CHECK(crossings_bruteforce(pts, 1) == expect);
    CHECK(crossings_bruteforce(pts, 3) == expect);
  }
}

TEST_CASE("identity forms on the convex hexagon") {
  auto f = crossings_from_edge_vector(EdgeVector{6, {6, 6, 3}});
  // 3 C(6,4) - (1*3*6 + 2*2*3) = 45 - 30
  CHECK(f.form1 == 15);
  // 3*6 + 1*12 - (3/4)*20
  CHECK(f.form2 == 15);
}

TEST_CASE("identity with the n = 24 lower-bound vector") {
  std::vector<Integer> leq{3, 9, 18, 30, 45, 63, 84, 108, 138, 174, 225};
  Rational v = crossings_from_leq(24, leq);
  CHECK(ceil(v) == 3699);
}

TEST_CASE("summarize on the convex octagon") {
  auto rep = summarize(std::span<const Point>(test_support::parabola_polygon(8)));
  CHECK(rep.cr_bruteforce == 70);
  CHECK(rep.edge_vector.halving_lines() == 4);
  CHECK(rep.consistent());
}

TEST_CASE("identity holds on random nine-point sets") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 100; ++trial) {
    auto raw = oracle::random_points(9, rng, 60);
    auto rep = summarize(std::span<const Point>(test_support::to_points(raw)));
    CHECK(rep.consistent());
    CHECK(rep.cr_bruteforce == oracle::crossings(raw));
  }
}

TEST_CASE("summarize from a halfperiod") {
  std::mt19937_64 rng(404);
  auto pts = test_support::to_points(oracle::random_points(8, rng));
  auto from_pts = summarize(std::span<const Point>(pts));
  auto from_h = summarize(halfperiod_from_points(pts));
  CHECK(from_h.cr_bruteforce == from_pts.cr_bruteforce);
  CHECK(from_h.edge_vector == from_pts.edge_vector);
  CHECK(from_h.consistent());
}

TEST_CASE("summarize rejects collinear input") {
  std::vector<Point> pts{{0, 0}, {1, 1}, {2, 2}, {0, 5}};
  CHECK_THROWS_AS(summarize(std::span<const Point>(pts)), NotInGeneralPosition);
}
