#include <doctest.h>

#include <random>

#include "kedge/central.hpp"
#include "kedge/constructions.hpp"
#include "kedge/edge_stats.hpp"
#include "kedge/sampling.hpp"
#include "support.hpp"

using namespace kedge;

namespace {

Halfperiod sweep_of(const std::vector<oracle::P>& raw) {
  return halfperiod_from_points(test_support::to_points(raw));
}

}  // namespace

TEST_CASE("blocks of the convex hexagon at k = 2") {
  auto h = halfperiod_from_points(test_support::parabola_polygon(6));
  auto b = blocks(h, 2);
  CHECK(b.size() == 7);
  CHECK_FALSE(b.front().has_entering);
  for (std::size_t j = 1; j < b.size(); ++j) CHECK(b[j].has_entering);
}

TEST_CASE("block boundaries sit at slots k and n-k") {
  Rng rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    auto h = random_halfperiod(5, rng);
    auto b = blocks(h, 2);
    std::size_t boundary = 0;
    for (auto j : h.positions()) boundary += (j == 2 || j == 3);
    CHECK(b.size() == boundary + 1);
    for (std::size_t j = 1; j < b.size(); ++j) {
      auto pos = h[b[j].first_step - 1].position;
      CHECK((pos == 2 || pos == 3));
      CHECK(b[j].k_transposition == (pos == 2));
    }
  }
}

TEST_CASE("class tallies partition the critical swaps") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    auto h = sweep_of(oracle::random_points(10, rng));
    auto rep = verify_central(h, 3);
    CHECK(rep.K == rep.A + rep.N + rep.R + rep.C + rep.S_light + rep.S_heavy);
    CHECK(rep.K == edge_vector_from_halfperiod(h).at(2));
    CHECK(rep.all_ok());
  }
}

TEST_CASE("classify labels only critical swaps with weights") {
  std::mt19937_64 rng(43);
  auto h = sweep_of(oracle::random_points(9, rng));
  auto recs = classify(h, 2);
  REQUIRE(recs.size() == h.size());
  for (const auto& r : recs) {
    bool critical = r.cls != SwapClass::center && r.cls != SwapClass::outer;
    CHECK(critical == (r.weight >= 0));
    auto j = h[r.step - 1].position;
    CHECK(critical == (j == 2 || j == 7));
  }
}

TEST_CASE("rearrangement keeps all-essential inputs fixed") {
  std::mt19937_64 rng(47);
  int fixed_cases = 0;
  for (int trial = 0; trial < 40; ++trial) {
    auto h = sweep_of(oracle::random_points(8, rng));
    for (std::size_t k = 1; k < 4; ++k) {
      auto recs = classify(h, k);
      bool all_essential = true;
      for (const auto& r : recs) all_essential = all_essential && r.essential;
      if (!all_essential) continue;
      ++fixed_cases;
      CHECK(rearrange_essential(h, k) == h);
    }
  }
  CHECK(fixed_cases > 0);
}

TEST_CASE("rearrangement preserves allowability and the low edge counts") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    auto h = sweep_of(oracle::random_points(8, rng));
    auto before = edge_vector_from_halfperiod(h);
    for (std::size_t k = 1; k < 4; ++k) {
      auto lam = rearrange_essential(h, k);
      CHECK(validate_allowable(lam).ok());
      auto after = edge_vector_from_halfperiod(lam);
      for (std::size_t i = 0; i < k; ++i) CHECK(after.at(i) == before.at(i));
      CHECK(compute_s(lam, k).s_value == compute_s(h, k).s_value);
    }
  }
}

TEST_CASE("convex polygons keep their edge vector under rearrangement") {
  for (std::size_t n : {7u, 8u, 9u}) {
    auto h = halfperiod_from_points(test_support::parabola_polygon(n));
    auto v = edge_vector_from_halfperiod(h);
    for (std::size_t k = 1; 2 * k < n; ++k) CHECK(edge_vector_from_halfperiod(rearrange_essential(h, k)) == v);
  }
}

TEST_CASE("central inequality on random sets for every admissible k") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 9 + trial % 4;
    auto h = sweep_of(oracle::random_points(n, rng, 400));
    for (std::size_t k = 1; 2 * k < n; ++k) {
      auto rep = verify_central(h, k);
      CHECK(rep.holds);
      CHECK(rep.auxiliary_failures.empty());
    }
  }
}

TEST_CASE("central inequality on abstract halfperiods and their rotations") {
  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    auto h = random_halfperiod(6 + trial % 5, rng);
    for (std::size_t k = 1; 2 * k < h.n(); ++k) {
      CHECK(verify_central(h, k).all_ok());
      CHECK(verify_central(rotate_halfperiod(h, 2), k).all_ok());
      CHECK(verify_central(reverse_sweep(h), k).all_ok());
    }
  }
}

TEST_CASE("convex hexagon at k = 2") {
  auto h = halfperiod_from_points(test_support::parabola_polygon(6));
  auto rep = verify_central(h, 2);
  CHECK(rep.E_geq_k == 3);
  Rational s(static_cast<long>(compute_s(h, 2).s_value));
  CHECK(rep.bound_value == Rational(6) - s / 2);
  CHECK(rep.holds);
}

TEST_CASE("polygon plus center attains equality") {
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{3, 9}, {6, 15}}) {
    auto e = build_polygon_center(k, n);
    auto h = halfperiod_from_points(e.points);
    std::int64_t s = static_cast<std::int64_t>(compute_s(h, k).s_value);
    CHECK(s == static_cast<std::int64_t>(n - 2 * k - 1));
    auto v = edge_vector_from_halfperiod(h);
    std::int64_t expect = static_cast<std::int64_t>(n - 2 * k - 1) * v.at(k - 1) + s * (s - 1) / 2;
    CHECK(v.geq(k) == expect);
    auto rep = verify_central(h, k);
    CHECK(rep.all_ok());
  }
}
