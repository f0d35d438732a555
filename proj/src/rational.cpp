#include "kedge/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "kedge/errors.hpp"

namespace kedge {

NotInGeneralPosition::NotInGeneralPosition(std::vector<Triple> triples)
    : InputError("not in general position: " + std::to_string(triples.size()) +
                 " collinear triple(s)"),
      triples_(std::move(triples)) {}

DirectionTie::DirectionTie(std::vector<std::array<std::size_t, 4>> pairs)
    : InputError("direction tie: " + std::to_string(pairs.size()) +
                 " pair(s) of point pairs span parallel lines"),
      pairs_(std::move(pairs)) {}

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_token(s)) throw InputError("malformed number '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  Integer den = parse_integer(den_text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

int sign(const Rational& q) { return sgn(q); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

std::int64_t to_int64_exact(const Rational& q) {
  if (q.get_den() != 1) throw std::domain_error("value " + to_string(q) + " is not an integer");
  return to_int64(q.get_num());
}

std::int64_t choose2(std::int64_t x) { return x < 2 ? 0 : x * (x - 1) / 2; }

std::int64_t choose(std::int64_t n, int k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Rational half_sqrt3(unsigned digits) {
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), 10, digits);
  // sqrt(3) = [1; 1, 2, 1, 2, ...]
  Integer p_prev = 1, q_prev = 0, p = 1, q = 1;
  for (int i = 1; 2 * q <= bound; ++i) {
    int a = (i % 2 == 1) ? 1 : 2;
    Integer p_next = a * p + p_prev;
    Integer q_next = a * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  Rational r(p, 2 * q);
  r.canonicalize();
  return r;
}

Rational frac(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite double");
  Rational r(value);  // GMP converts doubles exactly
  return r;
}

}  // namespace kedge
