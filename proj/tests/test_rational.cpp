#include <doctest.h>

#include <cmath>

#include "kedge/errors.hpp"
#include "kedge/rational.hpp"

using namespace kedge;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("17") == 17);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("+5") == 5);
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-10/5")) == "-2");
  CHECK(to_string(parse_rational("123456789012345678901234567890/1")) == "123456789012345678901234567890");
}

TEST_CASE("parse_rational rejects malformed text") {
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational("/3"), InputError);
}

TEST_CASE("floor and ceil round toward the right infinities") {
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(floor(Rational(4)) == 4);
  CHECK(ceil(Rational(4)) == 4);
}

TEST_CASE("frac canonicalizes") {
  Rational q = frac(16842, 2);
  CHECK(q.get_den() == 1);
  CHECK(q == 8421);
  CHECK(to_string(frac(-4, -6)) == "2/3");
  CHECK_THROWS(frac(1, 0));
}

TEST_CASE("integer helpers") {
  CHECK(choose2(0) == 0);
  CHECK(choose2(1) == 0);
  CHECK(choose2(27) == 351);
  CHECK(choose(6, 4) == 15);
  CHECK(choose(3, 5) == 0);
  CHECK(to_int64_exact(Rational(12)) == 12);
  CHECK_THROWS(to_int64_exact(Rational(1, 2)));
  CHECK(sign(Rational(-1, 3)) == -1);
  CHECK(abs(Rational(-1, 3)) == Rational(1, 3));
}

TEST_CASE("half_sqrt3 is a close under-or-over approximation") {
  for (unsigned digits : {6u, 12u, 40u}) {
    Rational s = half_sqrt3(digits);
    // |4 s^2 - 3| is tiny, so s ~ sqrt(3)/2
    Rational err = abs(4 * s * s - 3);
    Rational bound = 1;
    for (unsigned i = 0; i < digits; ++i) bound /= 10;
    CHECK(err < bound);
    CHECK(std::abs(s.get_d() - std::sqrt(3.0) / 2) < 1e-6);
  }
}

TEST_CASE("from_double is exact") {
  CHECK(from_double(0.5) == Rational(1, 2));
  CHECK(from_double(-3.0) == -3);
  CHECK_THROWS(from_double(std::nan("")));
}
