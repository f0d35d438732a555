#include "kedge/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "kedge/errors.hpp"

namespace kedge {

namespace {

std::int64_t c2(std::int64_t x) { return choose2(x); }

Rational sq(const Rational& x) { return x * x; }

std::int64_t to_i64(const Integer& z) { return to_int64(z); }

}  // namespace

int SqrtExpr::compare(const Rational& x) const {
  // sign of a + b sqrt(c) - x, i.e. of b sqrt(c) - d with d = x - a
  Rational d = x - a;
  int sb = (c == 0) ? 0 : sgn(b);
  int sd = sgn(d);
  if (sb == 0) return -sd;
  if (sb != sd) return sb > 0 ? 1 : -1;
  int mag = sgn(Rational(b * b * c) - d * d);  // |b sqrt c| vs |d|
  return sb > 0 ? mag : -mag;
}

Integer SqrtExpr::ceil() const {
  Integer z(static_cast<long>(std::floor(approx())));
  while (compare(Rational(z)) > 0) ++z;
  while (compare(Rational(z - 1)) <= 0) --z;
  return z;
}

double SqrtExpr::approx() const { return a.get_d() + b.get_d() * std::sqrt(c.get_d()); }

std::int64_t aichholzer_bound(std::int64_t n, std::int64_t k) {
  if (n < 2 || k < 0 || k > n / 2 - 1)
    throw InputError("k = " + std::to_string(k) + " out of range for n = " + std::to_string(n));
  const std::int64_t t = n / 3;
  return 3 * c2(k + 2) + 3 * c2(k + 2 - t) - std::max<std::int64_t>(0, (k + 1 - t) * (n - 3 * t));
}

std::optional<std::int64_t> USequence::at(std::int64_t k) const {
  if (k < first_k || k > last_k()) return std::nullopt;
  return values[static_cast<std::size_t>(k - first_k)];
}

namespace {

// u_k = ceil((C(n,2) + (n-2k-3) u_{k-1}) / (n-2k-2)) for m <= k <= floor((n-3)/2)
USequence extend(std::int64_t n, std::int64_t m, std::int64_t start_value) {
  USequence u;
  u.n = n;
  u.m = m;
  u.first_k = m - 1;
  u.values.push_back(start_value);
  for (std::int64_t k = m; 2 * k <= n - 3; ++k) {
    Rational q(Integer(static_cast<long>(c2(n) + (n - 2 * k - 3) * u.values.back())),
               Integer(static_cast<long>(n - 2 * k - 2)));
    q.canonicalize();
    u.values.push_back(to_i64(kedge::ceil(q)));
  }
  return u;
}

}  // namespace

USequence u_sequence(std::int64_t n) {
  if (n < 3) throw InputError("u sequence needs n >= 3");
  const std::int64_t m = to_i64(kedge::ceil(frac(4 * n - 11, 9)));
  const std::int64_t t = n / 3;
  Rational start = Rational(3 * c2(m + 1) + 3 * c2(m + 1 - t)) -
                   3 * Rational(m - t) * (frac(n, 3) - Rational(t));
  return extend(n, m, to_int64_exact(start));
}

USequence u_prime_sequence(std::int64_t n) {
  if (n <= 0 || n % 36 != 0) throw InputError("u' sequence needs n divisible by 36");
  const std::int64_t m = 17 * n / 36;
  const std::int64_t start = 3 * c2(m + 1) + 3 * c2(m + 1 - n / 3) + 18 * c2(m + 1 - 4 * n / 9);
  return extend(n, m, start);
}

SqrtExpr explicit_bound(std::int64_t n, std::int64_t k) {
  if (n < 3) throw InputError("explicit bound needs n >= 3");
  const std::int64_t m = to_i64(kedge::ceil(frac(4 * n - 11, 9)));
  if (k < m - 1 || 2 * k > n - 2)
    throw InputError("explicit bound defined for m-1 <= k <= (n-2)/2 only");
  SqrtExpr e;
  e.a = Rational(c2(n));
  e.b = -frac(5 * n * n + 19 * n - 31, 9);
  e.c = 1 - frac(2 * k + 2, n);
  return e;
}

std::int64_t halving_upper_bound(std::int64_t n) {
  if (n < 8) throw InputError("halving bound needs n >= 8");
  if (n % 2 == 0) return to_i64(kedge::floor(frac(n * (n + 30), 24) - 3));
  return to_i64(kedge::floor(frac((n - 3) * (n + 45), 18) + frac(1, 9)));
}

const char* to_string(Pipeline p) { return p == Pipeline::table1 ? "table1" : "section5"; }

Pipeline parse_pipeline(const std::string& s) {
  if (s == "table1") return Pipeline::table1;
  if (s == "section5") return Pipeline::section5;
  throw InputError("unknown pipeline '" + s + "'");
}

CrBoundResult cr_lower_bound(std::int64_t n, Pipeline pipeline) {
  if (n < 8) throw InputError("crossing bound needs n >= 8");
  CrBoundResult res;
  res.n = n;
  res.pipeline = pipeline;
  const std::int64_t last = n / 2 - 2;
  if (pipeline == Pipeline::table1) {
    for (std::int64_t k = 0; k < last; ++k) res.per_k.push_back(aichholzer_bound(n, k));
    res.per_k.push_back(c2(n) - halving_upper_bound(n));
  } else {
    const auto u = u_sequence(n);
    for (std::int64_t k = 0; k <= last; ++k)
      res.per_k.push_back(std::max(aichholzer_bound(n, k), u.at(k).value_or(0)));
  }
  std::vector<Integer> leq;
  for (auto v : res.per_k) leq.emplace_back(static_cast<long>(v));
  // E_<=k form of the crossing identity
  Rational sum = 0;
  for (std::size_t k = 0; k < leq.size(); ++k)
    sum += Rational(n - 2 * static_cast<std::int64_t>(k) - 3) * leq[k];
  sum -= frac(3, 4) * Rational(choose(n, 3));
  if (n % 2 == 1) sum += frac(c2(n), 4);
  res.exact_value = sum;
  res.value = to_i64(kedge::ceil(sum));
  return res;
}

Rational choose2_clamped(const Rational& x) {
  if (x < 1) return 0;
  return x * (x - 1) / 2;
}

Rational series_coefficient(std::int64_t j) {
  if (j < 1) throw InputError("series index must be positive");
  return frac(1, 2) - frac(1, 3 * j * (j + 1));
}

Rational series_bound(std::int64_t n, std::int64_t k, std::int64_t terms) {
  if (terms < 1) throw InputError("series_bound needs terms >= 1");
  Rational x = Rational(k + 2);
  Rational total = 3 * choose2_clamped(x) + 3 * choose2_clamped(x - frac(n, 3));
  for (std::int64_t j = 2; j <= terms; ++j)
    total += Rational(3 * j * (j + 1)) * choose2_clamped(x - series_coefficient(j) * n);
  return total;
}

AsymptoticReport asymptotic_constants(double tolerance) {
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f1 = [](double x) {
    double tail = std::max(0.0, x - 1.0 / 3.0);
    return 24.0 * 1.5 * (1 - 2 * x) * (x * x + tail * tail);
  };
  auto f2 = [](double x) {
    double r = std::max(0.0, 1 - 2 * x);
    return 24.0 * (1 - 2 * x) * (0.5 - (5.0 / 9.0) * std::sqrt(r));
  };
  AsymptoticReport rep;
  // split at the kink of max(0, x - 1/3)
  rep.first_integral = integrator.integrate(f1, 0.0, 1.0 / 3.0) + integrator.integrate(f1, 1.0 / 3.0, 4.0 / 9.0);
  rep.second_integral = integrator.integrate(f2, 4.0 / 9.0, 0.5);
  rep.sum = rep.first_integral + rep.second_integral;
  rep.first_error = std::abs(rep.first_integral - 86.0 / 243.0);
  rep.second_error = std::abs(rep.second_integral - 19.0 / 729.0);
  rep.sum_error = std::abs(rep.sum - 277.0 / 729.0);
  rep.limit_constant = 277.0 / 729.0;
  rep.series_constant = 2.0 / 27.0 * (15.0 - std::numbers::pi * std::numbers::pi);
  rep.ok = rep.first_error <= tolerance && rep.second_error <= tolerance && rep.sum_error <= tolerance &&
           rep.limit_constant > 0.379972 && rep.series_constant > 0.380029;
  return rep;
}

LemmaReport lemma_brackets(std::int64_t n) {
  LemmaReport rep;
  rep.n = n;
  if (n < 6) throw InputError("lemma brackets need n >= 6");
  const auto u = u_sequence(n);
  const std::int64_t m = u.m;
  const Rational total(c2(n));
  const Rational base = total - Rational(*u.at(m - 1));
  auto fail = [&](std::int64_t k, const std::string& what) {
    rep.failures.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + what);
  };
  if (base <= 0) {
    fail(m - 1, "C(n,2) - u_{m-1} is not positive");
    return rep;
  }
  // m-1 <= k <= (n-5)/2
  for (std::int64_t k = m - 1; 2 * k <= n - 5; ++k) {
    ++rep.checks;
    const Rational q = (total - Rational(*u.at(k))) / base;
    const Rational low = 1 - (Rational(2 * k) + frac(9, 2)) / n;
    const Rational high = 1 - frac(2 * k + 2, n);
    // 3 sqrt(low) < q  and  q <= 3 sqrt(high), with q > 0
    if (!(q > 0 && 9 * low < sq(q))) fail(k, "lower bracket fails");
    if (!(q >= 0 && sq(q) <= 9 * high)) fail(k, "upper bracket fails");
    if (k >= m) {
      ++rep.checks;
      const Rational rhs((n - 1) * (n - 2 * k - 3));
      if (!(9 * low * sq(base) >= sq(rhs))) fail(k, "(n-1)(n-2k-3) estimate fails");
    }
  }
  if (n <= 40) {
    // the estimate's range holds at most k = floor((n-5)/2)
    for (std::int64_t k = m; 2 * k <= n - 5; ++k)
      if (k != (n - 5) / 2) fail(k, "estimate range has more than one element");
  }
  return rep;
}

ComparisonReport comparison_bounds(std::int64_t n, std::int64_t k) {
  if (n < 3 || 3 * k < n || 2 * k > n) throw InputError("comparison bounds need n/3 <= k <= n/2");
  const double nd = static_cast<double>(n);
  const double total = static_cast<double>(c2(n));
  const double spread = std::pow(nd, 1.5) * std::sqrt(nd - 2.0 * static_cast<double>(k));
  ComparisonReport rep;
  rep.f1_envelope = total - std::sqrt(2.0) / 2.0 * spread;
  rep.f2_envelope = total - 13.0 * std::sqrt(3.0) / 36.0 * spread;
  const double radicand = std::max(0.0, 1.0 - (2.0 * static_cast<double>(k) + 2.0) / nd);
  rep.explicit_value = total - std::sqrt(radicand) * (5 * nd * nd + 19 * nd - 31) / 9.0;
  rep.f1_below_f2 = rep.f1_envelope <= rep.f2_envelope;
  rep.both_below_explicit = rep.f1_envelope <= rep.explicit_value && rep.f2_envelope <= rep.explicit_value;
  return rep;
}

BoundTable bound_table(std::int64_t n) {
  if (n < 3) throw InputError("bound table needs n >= 3");
  BoundTable t;
  t.n = n;
  const auto u = u_sequence(n);
  std::optional<USequence> up;
  if (n % 36 == 0) up = u_prime_sequence(n);
  const std::int64_t last = n / 2 - 1;
  for (std::int64_t k = 0; k <= last; ++k) {
    BoundRow row;
    row.k = k;
    row.aichholzer = aichholzer_bound(n, k);
    row.u = u.at(k);
    if (up) row.u_prime = up->at(k);
    if (k >= u.m - 1 && 2 * k <= n - 2) row.explicit_value = explicit_bound(n, k);
    row.best = row.aichholzer;
    row.source = "aichholzer";
    if (row.u && *row.u > row.best) {
      row.best = *row.u;
      row.source = "u";
    }
    if (row.explicit_value) {
      auto e = to_i64(row.explicit_value->ceil());
      if (e > row.best) {
        row.best = e;
        row.source = "explicit";
      }
    }
    if (k == last) {
      row.best = c2(n);
      row.source = "total";
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace kedge
