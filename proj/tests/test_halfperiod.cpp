#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "kedge/constructions.hpp"
#include "kedge/halfperiod.hpp"
#include "kedge/sampling.hpp"
#include "support.hpp"

using namespace kedge;

namespace {

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

TEST_CASE("triangle sweep") {
  std::vector<Point> tri{{0, 0}, {4, 1}, {1, 3}};
  auto h = halfperiod_from_points(tri);
  CHECK(h.n() == 3);
  CHECK(h.size() == 3);
  for (auto j : h.positions()) CHECK((j == 1 || j == 2));
  CHECK(validate_allowable(h).ok());
}

TEST_CASE("convex quadrilateral sweep") {
  auto h = halfperiod_from_points(test_support::parabola_polygon(4));
  CHECK(h.size() == 6);
  int boundary = 0, middle = 0;
  for (auto j : h.positions()) (j == 2 ? middle : boundary)++;
  CHECK(boundary == 4);
  CHECK(middle == 2);
}

TEST_CASE("sweeps of random sets are allowable and record adjacent labels") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto pts = test_support::to_points(oracle::random_points(4 + trial % 7, rng));
    auto sw = sweep_points(pts);
    CHECK(validate_allowable(sw.halfperiod).ok());
    CHECK(sw.halfperiod.initial() == identity(pts.size()));
    std::vector<std::size_t> seen = sw.point_of_label;
    std::sort(seen.begin(), seen.end());
    CHECK(seen == identity(pts.size()));
  }
}

TEST_CASE("a repeated transposition is reported") {
  // 0 1 2: swap slot 1 twice, then the rest
  std::vector<std::size_t> pos{1, 1, 2, 1};
  auto h = Halfperiod::from_positions(identity(3), pos);
  auto rep = validate_allowable(h);
  CHECK_FALSE(rep.ok());
  bool twice = false, not_reversed = false;
  for (const auto& v : rep.violations) {
    twice = twice || v.find("more than once") != std::string::npos;
    not_reversed = not_reversed || v.find("not the reverse") != std::string::npos;
  }
  CHECK(twice);
  CHECK(not_reversed);
  CHECK_THROWS_AS(require_valid(h), InputError);
}

TEST_CASE("hand-built abstract sequence on four labels is allowable") {
  // 1234 -> 2134 -> 2143 -> 2413 -> 4213 -> 4231 -> 4321
  std::vector<std::size_t> pos{1, 3, 2, 1, 3, 2};
  auto h = Halfperiod::from_positions(identity(4), pos);
  CHECK(validate_allowable(h).ok());
  CHECK(h.permutation_at(6) == std::vector<std::size_t>{3, 2, 1, 0});
}

TEST_CASE("k_center at the ends of the halfperiod") {
  std::mt19937_64 rng(3);
  auto pts = test_support::to_points(oracle::random_points(9, rng));
  auto h = halfperiod_from_points(pts);
  for (std::size_t k = 1; 2 * k < 9; ++k) {
    auto c0 = k_center(h, 0, k);
    std::vector<std::size_t> expect(h.initial().begin() + k, h.initial().end() - k);
    std::sort(expect.begin(), expect.end());
    CHECK(c0 == expect);
    CHECK(k_center(h, h.size(), k) == c0);
  }
}

TEST_CASE("k_center is a singleton when n = 2k + 1") {
  Rng rng(5);
  auto h = random_halfperiod(5, rng);
  for (std::size_t i = 0; i <= h.size(); ++i) CHECK(k_center(h, i, 2).size() == 1);
}

TEST_CASE("compute_s on convex position and the equality constructions") {
  auto convex = halfperiod_from_points(convex_position(9));
  auto tr = compute_s(convex, 1);
  CHECK(tr.sizes.size() == convex.size() + 1);
  CHECK(tr.s_value <= 9 - 3);
  CHECK(tr.sizes.front() == 7);

  auto pc = build_polygon_center(3, 9);
  CHECK(compute_s(halfperiod_from_points(pc.points), 3).s_value == 9 - 2 * 3 - 1);
  auto cp = build_cluster_polygon(1, 3);
  CHECK(compute_s(halfperiod_from_points(cp.points), 3).s_value == 0);
  CHECK_THROWS_AS(compute_s(convex, 0), InputError);
  CHECK_THROWS_AS(compute_s(convex, 5), InputError);
}

TEST_CASE("halfperiod files round trip") {
  std::mt19937_64 rng(2);
  auto h = halfperiod_from_points(test_support::to_points(oracle::random_points(7, rng)));
  std::stringstream io;
  write_halfperiod(io, h);
  auto back = read_halfperiod(io);
  CHECK(back == h);
  std::istringstream short_file("3\n1 2 3\n1 1 1 2\n");
  CHECK_THROWS_AS(require_valid(read_halfperiod(short_file)), InputError);
  std::istringstream bad_label("3\n1 2 3\n1 1 1 4\n2 2 1 3\n3 1 2 3\n");
  CHECK_THROWS_AS(read_halfperiod(bad_label), InputError);
  std::istringstream bad_perm("3\n1 2\n");
  CHECK_THROWS_AS(read_halfperiod(bad_perm), InputError);
}

TEST_CASE("rotation and reversal preserve allowability") {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto h = random_halfperiod(4 + trial % 6, rng);
    CHECK(validate_allowable(h).ok());
    for (std::size_t shift : {1u, 3u, 7u}) CHECK(validate_allowable(rotate_halfperiod(h, shift)).ok());
    auto r = reverse_sweep(h);
    CHECK(validate_allowable(r).ok());
    CHECK(r.size() == h.size());
  }
}

TEST_CASE("order type of a sweep matches the geometry") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    auto raw = oracle::random_points(7, rng);
    auto pts = test_support::to_points(raw);
    auto sw = sweep_points(pts);
    auto ot = order_type(sw.halfperiod);
    const auto& idx = sw.point_of_label;
    for (std::size_t a = 0; a < 7; ++a)
      for (std::size_t b = a + 1; b < 7; ++b)
        for (std::size_t c = b + 1; c < 7; ++c)
          CHECK(ot(a, b, c) == oracle::det_sign(raw[idx[a]], raw[idx[b]], raw[idx[c]]));
  }
}

TEST_CASE("parallel spanned lines need an explicit tie break") {
  std::vector<Point> pts{{0, 0}, {4, 0}, {1, 3}, {3, 3}, {7, 11}};
  CHECK_THROWS_AS(sweep_points(pts), DirectionTie);
  auto h = halfperiod_from_points(pts, SweepOptions{.break_ties = true});
  CHECK(validate_allowable(h).ok());
}
