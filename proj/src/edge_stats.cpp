#include "kedge/edge_stats.hpp"

#include <numeric>
#include <thread>

#include "kedge/errors.hpp"

namespace kedge {

std::vector<std::int64_t> EdgeVector::leq() const {
  std::vector<std::int64_t> out(counts.size());
  std::partial_sum(counts.begin(), counts.end(), out.begin());
  return out;
}

std::int64_t EdgeVector::geq(std::size_t k) const {
  std::int64_t s = 0;
  for (std::size_t j = k; j < counts.size(); ++j) s += counts[j];
  return s;
}

std::int64_t EdgeVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
}

void EdgeVector::require_consistent() const {
  if (counts.size() != n / 2) throw InputError("edge vector has wrong length");
  for (auto c : counts)
    if (c < 0) throw InputError("edge vector has a negative entry");
  if (total() != choose2(static_cast<std::int64_t>(n)))
    throw InputError("edge vector does not sum to C(n,2)");
}

EdgeVector edge_vector_bruteforce(std::span<const Point> points) {
  const std::size_t n = points.size();
  PointSet(std::vector<Point>(points.begin(), points.end())).require_general_position();
  EdgeVector v{n, std::vector<std::int64_t>(n / 2, 0)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t left = 0;
      for (std::size_t q = 0; q < n; ++q)
        if (q != i && q != j && orientation(points[i], points[j], points[q]) > 0) ++left;
      ++v.counts[std::min(left, n - 2 - left)];
    }
  return v;
}

EdgeVector edge_vector_from_halfperiod(const Halfperiod& h) {
  require_valid(h);
  const std::size_t n = h.n();
  EdgeVector v{n, std::vector<std::int64_t>(n / 2, 0)};
  for (const auto& t : h.transpositions()) ++v.counts[std::min(t.position, n - t.position) - 1];
  return v;
}

std::int64_t crossings_bruteforce(const OrientationTable& o, unsigned threads) {
  const std::size_t n = o.size();
  if (n < 4) return 0;
  auto inside = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    int s = o(a, b, d);
    return s == o(b, c, d) && s == o(c, a, d);
  };
  std::vector<std::int64_t> per_first(n, 0);
  auto work = [&](std::size_t a) {
    std::int64_t cnt = 0;
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        for (std::size_t d = c + 1; d < n; ++d)
          if (!inside(a, b, c, d) && !inside(a, b, d, c) && !inside(a, c, d, b) &&
              !inside(b, c, d, a))
            ++cnt;
    per_first[a] = cnt;
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1) {
    for (std::size_t a = 0; a < n; ++a) work(a);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t a = t; a < n; a += threads) work(a);
      });
    for (auto& th : pool) th.join();
  }
  return std::accumulate(per_first.begin(), per_first.end(), std::int64_t{0});
}

std::int64_t crossings_bruteforce(std::span<const Point> points, unsigned threads) {
  PointSet(std::vector<Point>(points.begin(), points.end())).require_general_position();
  return crossings_bruteforce(OrientationTable(points), threads);
}

Rational crossings_from_leq(std::size_t n, std::span<const Integer> e_leq) {
  const auto nn = static_cast<std::int64_t>(n);
  Rational sum = 0;
  for (std::size_t k = 0; k + 2 <= n / 2 && k < e_leq.size(); ++k)
    sum += Rational(nn - 2 * static_cast<std::int64_t>(k) - 3) * e_leq[k];
  sum -= frac(3, 4) * Rational(choose(nn, 3));
  if (n % 2 == 1) sum += frac(choose(nn, 2), 4);  // (1 + (-1)^(n+1)) / 8 = 1/4
  return sum;
}

IdentityForms crossings_from_edge_vector(const EdgeVector& v) {
  v.require_consistent();
  const auto n = static_cast<std::int64_t>(v.n);
  Rational f1 = 3 * Rational(choose(n, 4));
  for (std::size_t k = 0; k < v.counts.size(); ++k) {
    auto kk = static_cast<std::int64_t>(k);
    f1 -= Rational(kk * (n - kk - 2)) * Rational(v.counts[k]);
  }
  std::vector<Integer> leq;
  for (auto x : v.leq()) leq.emplace_back(static_cast<long>(x));
  return {f1, crossings_from_leq(v.n, leq)};
}

CrossingReport summarize(std::span<const Point> points) {
  CrossingReport r;
  r.n = points.size();
  r.edge_vector = edge_vector_bruteforce(points);
  r.cr_bruteforce = crossings_bruteforce(points);
  auto forms = crossings_from_edge_vector(r.edge_vector);
  r.cr_identity_form1 = forms.form1;
  r.cr_identity_form2 = forms.form2;
  if (r.n >= 2) {
    auto h = halfperiod_from_points(points, SweepOptions{.break_ties = true});
    r.routes_agree = edge_vector_from_halfperiod(h) == r.edge_vector;
  }
  return r;
}

CrossingReport summarize(const Halfperiod& h) {
  CrossingReport r;
  r.n = h.n();
  r.edge_vector = edge_vector_from_halfperiod(h);
  r.cr_bruteforce = crossings_bruteforce(order_type(h));
  auto forms = crossings_from_edge_vector(r.edge_vector);
  r.cr_identity_form1 = forms.form1;
  r.cr_identity_form2 = forms.form2;
  return r;
}

}  // namespace kedge
