#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace kedge {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept in canonical form

/// Parses "17", "-3", "+5" or "p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
int sign(const Rational& q);
Rational abs(const Rational& q);

/// Converts to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(const Integer& z);
std::int64_t to_int64_exact(const Rational& q);  // q must be an integer

/// C(x, 2) for integer x, zero when x < 2.
std::int64_t choose2(std::int64_t x);
std::int64_t choose(std::int64_t n, int k);

/// Best rational approximation p/q of sqrt(3)/2 from the continued fraction
/// of sqrt(3), with q > 10^digits.
Rational half_sqrt3(unsigned digits);

/// num/den in canonical form (mpq_class's two-argument constructor does not
/// reduce). Throws std::domain_error if den == 0.
Rational frac(std::int64_t num, std::int64_t den);

/// Exact rational value of a finite double.
Rational from_double(double value);

}  // namespace kedge
