#include "kedge/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "kedge/errors.hpp"
#include "kedge/halfperiod.hpp"

namespace kedge {

namespace {

Point along(const Point& from, const Point& to, const Rational& lambda) {
  return from + lambda * (to - from);
}

// Parameter of p on the directed segment from o to d (p assumed on the line).
Rational parameter(const Point& o, const Point& d, const Point& p) {
  Point v = d - o;
  return dot(p - o, v) / dot(v, v);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationError(what);
}

std::string idx(std::size_t i) { return std::to_string(i + 1); }

// pts[from..] lie on segment o->d in this order, strictly inside it
void check_in_order(const std::vector<Point>& pts, std::size_t from, const Point& o, const Point& d,
                    const std::string& name) {
  Rational last = 0;
  for (std::size_t i = from; i < pts.size(); ++i) {
    require(orientation(o, d, pts[i]) == 0, name + "_" + idx(i) + " is off its line");
    Rational t = parameter(o, d, pts[i]);
    require(t > last && t < 1, name + "_" + idx(i) + " is out of order");
    last = t;
  }
}

struct Recursion {
  std::vector<Point> a, ap;  // a[0] = a_1
  Point a_inf, ap_inf, b_inf;
};

void check_properties(const Recursion& g, const Rotation2Pi3& rot, std::size_t t) {
  const auto& a = g.a;
  const auto& ap = g.ap;
  std::vector<Point> b;
  for (std::size_t i = 0; i < t; ++i) b.push_back(rot(a[i]));
  std::string at = " (t = " + std::to_string(t) + ")";
  // (I), (II): a_2..a_t and a'_2..a'_t in order toward a_inf, a'_inf
  check_in_order(std::vector<Point>(a.begin() + 1, a.begin() + t), 1, a[1], g.a_inf, "(I) a" + at);
  check_in_order(std::vector<Point>(ap.begin() + 1, ap.begin() + t), 1, ap[1], g.ap_inf, "(II) a'" + at);
  // (III)
  for (std::size_t i = 1; i + 1 < t; ++i)
    for (std::size_t j = 1; j < t; ++j)
      require(line_crosses_open_segment(ap[i], a[j], b[i], b[i + 1]),
              "(III) fails for i=" + idx(i) + " j=" + idx(j) + at);
  // (IV)
  for (std::size_t j = 1; j < t; ++j)
    require(line_crosses_open_segment(ap[t - 1], a[j], b[t - 1], g.b_inf), "(IV) fails for j=" + idx(j) + at);
}

Recursion grow(int r, const Rotation2Pi3& rot, const Rational& lambda, std::vector<std::string>& log) {
  Recursion g;
  g.a = {Point(-700, -50), Point(-410, 150), Point(-436, 144)};
  g.ap = {Point(-1300, 20), Point(-1200, -10), Point(-1170, -14)};
  Point c2 = rot.inverse(g.a[1]), c3 = rot.inverse(g.a[2]);
  g.a_inf = line_intersection(g.a[1], g.a[2], c2, c3);
  g.ap_inf = line_intersection(g.ap[1], g.ap[2], g.a[1], g.a[2]);
  g.b_inf = rot(g.a_inf);
  check_properties(g, rot, 3);
  log.push_back("properties (I)-(IV) hold for t = 3");
  for (int t = 3; t < r; ++t) {
    const Point bt = rot(g.a[t - 1]);
    const Point& apt = g.ap[t - 1];
    require(line_crosses_open_segment(apt, g.a[1], bt, g.b_inf), "l(a'_t a_2) misses (b_t, b_inf)");
    Point x = line_intersection(apt, g.a[1], bt, g.b_inf);
    Point b_next = along(x, g.b_inf, lambda);
    Point a_next = rot.inverse(b_next);
    require(line_crosses_open_segment(b_next, g.a_inf, apt, g.ap_inf), "l(b_{t+1} a_inf) misses (a'_t, a'_inf)");
    Point y = line_intersection(b_next, g.a_inf, apt, g.ap_inf);
    g.a.push_back(a_next);
    g.ap.push_back(along(y, g.ap_inf, lambda));
    check_properties(g, rot, static_cast<std::size_t>(t) + 1);
    log.push_back("properties (I)-(IV) hold for t = " + std::to_string(t + 1));
  }
  return g;
}

Rational abs_slope(const Point& d) { return abs(d.y) / abs(d.x); }

// Smallest F (doubling) such that every line joining A'' to S \ (B'' u C'')
// is flatter than every line spanned inside S \ A''.
std::vector<Point> place_far_points(const std::vector<Point>& bounded, int r, const Rotation2Pi3& rot,
                                    Rational& far) {
  std::vector<Point> others;
  for (const auto& p : bounded) others.push_back(p);
  for (const auto& p : bounded) others.push_back(rot(p));
  for (const auto& p : bounded) others.push_back(rot.inverse(p));
  std::optional<Rational> fixed_min;  // lines within `others` do not depend on F
  for (std::size_t i = 0; i < others.size(); ++i)
    for (std::size_t j = i + 1; j < others.size(); ++j) {
      Point d = others[j] - others[i];
      if (d.x == 0) continue;
      Rational s = abs_slope(d);
      if (!fixed_min || s < *fixed_min) fixed_min = s;
    }
  for (int round = 0; round < 200; ++round, far *= 2) {
    std::vector<Point> a2;
    for (int i = 0; i < r; ++i) a2.emplace_back(-Rational(r - i) * far, Rational(0));
    std::vector<Point> rotated;
    for (const auto& p : a2) rotated.push_back(rot(p));
    for (const auto& p : a2) rotated.push_back(rot.inverse(p));
    std::optional<Rational> steep_min = fixed_min;
    auto consider = [&](const Point& d) {
      if (d.x == 0) return;
      Rational s = abs_slope(d);
      if (!steep_min || s < *steep_min) steep_min = s;
    };
    for (std::size_t i = 0; i < rotated.size(); ++i) {
      for (std::size_t j = i + 1; j < rotated.size(); ++j) consider(rotated[j] - rotated[i]);
      for (const auto& q : others) consider(q - rotated[i]);
    }
    bool ok = true;
    for (const auto& p : a2) {
      for (const auto& q : others) {
        Point d = q - p;
        if (d.x == 0 || (steep_min && abs_slope(d) >= *steep_min)) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) return a2;
  }
  throw VerificationError("could not separate the slopes of A'' lines");
}

std::vector<Point> bend(std::vector<Point> pts, std::size_t from, const Point& direction, const Rational& amount) {
  Rational norm = abs(direction.x) + abs(direction.y);
  Point normal(-direction.y / norm, direction.x / norm);
  for (std::size_t i = from; i < pts.size(); ++i) {
    auto step = static_cast<long>(i - from);
    pts[i] = pts[i] + amount * Rational(step * step) * normal;
  }
  return pts;
}

const char* const class_prefix[9] = {"a", "a'", "a''", "b", "b'", "b''", "c", "c'", "c''"};

LabeledPointSet assemble(int r, const std::vector<Point>& a, const std::vector<Point>& ap,
                         const std::vector<Point>& a2, const Rotation2Pi3& rot) {
  LabeledPointSet s;
  s.r = r;
  const std::vector<Point>* fams[3] = {&a, &ap, &a2};
  for (int letter = 0; letter < 3; ++letter)
    for (int kind = 0; kind < 3; ++kind)
      for (std::size_t i = 0; i < fams[kind]->size(); ++i) {
        Point p = (*fams[kind])[i];
        if (letter == 1) p = rot(p);
        if (letter == 2) p = rot.inverse(p);
        p.label = std::string(class_prefix[letter * 3 + kind]) + "_" + idx(i);
        s.points.push_back(std::move(p));
        s.classes.push_back(letter * 3 + kind);
      }
  return s;
}

bool sound_perturbation(const OrientationTable& raw, const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        int o = orientation(pts[i], pts[j], pts[k]);
        if (o == 0) return false;
        int before = raw(i, j, k);
        if (before != 0 && before != o) return false;
      }
  return true;
}

bool matches_targets(int r, const std::vector<Point>& pts) {
  auto leq = edge_vector_bruteforce(pts).leq();
  for (int k = 0; k <= 4 * r - 1; ++k)
    if (leq[static_cast<std::size_t>(k)] != sr_target_leq(r, k)) return false;
  return true;
}

SrBuild build_sr_at(const SrConfig& cfg, unsigned digits) {
  const Rotation2Pi3 rot(digits);
  SrBuild out;
  out.precision = digits;
  auto g = grow(cfg.r, rot, cfg.segment_choice, out.certificates);

  std::vector<Point> bounded = g.a;
  bounded.insert(bounded.end(), g.ap.begin(), g.ap.end());
  out.far_factor = cfg.far_factor;
  auto a2 = place_far_points(bounded, cfg.r, rot, out.far_factor);
  out.certificates.push_back("A'' slope separation certified with F = " + to_string(out.far_factor));
  out.raw = assemble(cfg.r, g.a, g.ap, a2, rot);

  const OrientationTable raw_table(out.raw.points);
  Rational eps = cfg.perturbation_epsilon;
  for (int attempt = 0; attempt < 6; ++attempt, eps /= 1000) {
    for (int side : {1, -1}) {
      const Rational amount = eps * side;
      auto pa = g.a, pap = g.ap, pa2 = a2;
      // only families of three or more collinear points need bending
      if (cfg.r >= 4) {
        pa = bend(pa, 1, g.a_inf - g.a[1], amount);
        pap = bend(pap, 1, g.ap_inf - g.ap[1], amount);
      }
      pa2 = bend(pa2, 0, Point(1, 0), amount);
      auto candidate = assemble(cfg.r, pa, pap, pa2, rot);
      if (!sound_perturbation(raw_table, candidate.points)) continue;
      if (!matches_targets(cfg.r, candidate.points)) continue;
      out.perturbed = std::move(candidate);
      out.epsilon = amount;
      out.certificates.push_back("perturbation by " + to_string(amount) +
                                 " keeps every strict orientation and reaches general position");
      out.certificates.push_back("E_<=k matches the closed form for k <= " + std::to_string(4 * cfg.r - 1));
      return out;
    }
  }
  throw VerificationError("no sound perturbation found");
}

}  // namespace

SrBuild build_sr(const SrConfig& cfg) {
  if (cfg.r < 3) throw InputError("S_r needs r >= 3");
  if (cfg.segment_choice <= 0 || cfg.segment_choice >= 1) throw InputError("segment choice must lie in (0, 1)");
  if (cfg.perturbation_epsilon <= 0) throw InputError("perturbation epsilon must be positive");
  if (cfg.far_factor <= 0) throw InputError("far factor must be positive");
  unsigned digits = std::max(cfg.precision, 1u);
  std::string last_error;
  for (int round = 0; round <= 4; ++round, digits *= 2) {
    try {
      return build_sr_at(cfg, digits);
    } catch (const VerificationError& e) {
      last_error = e.what();
    }
  }
  throw VerificationError("S_" + std::to_string(cfg.r) + " failed verification: " + last_error);
}

std::int64_t sr_target_leq(int r, std::int64_t k) {
  if (k < 0 || k > 4 * r - 1) throw InputError("closed form holds for 0 <= k <= 4r-1 only");
  if (k <= 3 * r - 1) return 3 * choose2(k + 2);
  if (k <= 4 * r - 2) return 3 * choose2(k + 2) + 3 * choose2(k - 3 * r + 2);
  return 3 * choose2(4 * r + 1) + 3 * choose2(r + 1) + 3;
}

std::int64_t sr_target_bichromatic(int r, std::int64_t k) {
  if (k < 0 || k > 4 * r - 1) throw InputError("closed form holds for 0 <= k <= 4r-1 only");
  if (k <= 3 * r - 1) return 3 * choose2(k + 2);
  return 3 * choose2(3 * r + 1) + (k - 3 * r + 1) * 9 * r;
}

std::int64_t sr_target_monochromatic(int r, std::int64_t k) {
  if (k < 0 || k > 4 * r - 1) throw InputError("closed form holds for 0 <= k <= 4r-1 only");
  if (k <= 3 * r - 1) return 0;
  if (k <= 4 * r - 2) return 6 * choose2(k - 3 * r + 2);
  return 6 * choose2(r + 1) + 3;
}

ColorSplit count_bichromatic_monochromatic(const LabeledPointSet& s) {
  const std::size_t n = s.points.size();
  if (s.classes.size() != n) throw InputError("point set is not labeled");
  PointSet(s.points).require_general_position();
  std::vector<std::int64_t> bi(n / 2, 0), mono(n / 2, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t left = 0;
      for (std::size_t q = 0; q < n; ++q)
        if (q != i && q != j && orientation(s.points[i], s.points[j], s.points[q]) > 0) ++left;
      std::size_t k = std::min(left, n - 2 - left);
      ++(s.letter(i) == s.letter(j) ? mono : bi)[k];
    }
  ColorSplit out;
  std::int64_t b = 0, m = 0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    out.bichromatic_leq.push_back(b += bi[k]);
    out.monochromatic_leq.push_back(m += mono[k]);
  }
  return out;
}

bool SrAudit::ok() const {
  return symmetric && measured_leq == target_leq && measured_bi == target_bi && measured_mono == target_mono;
}

SrAudit audit_sr(const SrBuild& build) {
  const auto& s = build.perturbed;
  SrAudit a;
  a.r = s.r;
  const auto leq = edge_vector_bruteforce(s.points).leq();
  const auto split = count_bichromatic_monochromatic(s);
  for (int k = 0; k <= 4 * s.r - 1; ++k) {
    auto kk = static_cast<std::size_t>(k);
    a.measured_leq.push_back(leq[kk]);
    a.target_leq.push_back(sr_target_leq(s.r, k));
    a.measured_bi.push_back(split.bichromatic_leq[kk]);
    a.target_bi.push_back(sr_target_bichromatic(s.r, k));
    a.measured_mono.push_back(split.monochromatic_leq[kk]);
    a.target_mono.push_back(sr_target_monochromatic(s.r, k));
  }
  // 3-symmetry: the B and C classes are exact images of the A classes, and
  // theta preserves every orientation among A points.
  const Rotation2Pi3 rot(build.precision);
  const std::size_t third = s.points.size() / 3;
  a.symmetric = true;
  for (std::size_t i = 0; i < third && a.symmetric; ++i) {
    a.symmetric = rot(s.points[i]) == s.points[third + i] && rot.inverse(s.points[i]) == s.points[2 * third + i];
  }
  for (std::size_t i = 0; i < third && a.symmetric; ++i)
    for (std::size_t j = i + 1; j < third && a.symmetric; ++j)
      for (std::size_t k = j + 1; k < third && a.symmetric; ++k)
        a.symmetric = orientation(s.points[i], s.points[j], s.points[k]) ==
                      orientation(s.points[third + i], s.points[third + j], s.points[third + k]);
  return a;
}

// ---- equality constructions ----

namespace {

// Rational point on the unit circle at angle phi, from t = tan(phi/2)
// rounded to 10^-precision. Always exactly on the circle.
Point circle_point(double phi, unsigned precision) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, precision);
  Rational t = from_double(std::tan(phi / 2));
  Rational tq(floor(t * scale + frac(1, 2)), scale);
  tq.canonicalize();
  Rational d = 1 + tq * tq;
  return Point((1 - tq * tq) / d, 2 * tq / d);
}

std::vector<Point> polygon(std::size_t q, unsigned precision, int attempt) {
  std::vector<Point> v;
  const double jitter = 1e-3 * (attempt + 1) / static_cast<double>(q);
  for (std::size_t j = 0; j < q; ++j) {
    // irregular jitter so that no two chords are parallel
    double wobble = static_cast<double>((j * j * 7919 + j * 104729 + static_cast<std::size_t>(attempt) * 31) % 1000) / 1000.0;
    double phi = 0.1 + 2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(q) + jitter * wobble;
    v.push_back(circle_point(phi, precision));
  }
  return v;
}

EqualityConstruction measure(std::vector<Point> pts, std::size_t k) {
  EqualityConstruction e;
  e.k = k;
  e.edge_vector = edge_vector_bruteforce(pts);
  e.E_k_minus_1 = e.edge_vector.at(k - 1);
  e.E_geq_k = e.edge_vector.geq(k);
  e.s = compute_s(halfperiod_from_points(pts), k).s_value;
  e.points = std::move(pts);
  return e;
}

}  // namespace

EqualityConstruction build_polygon_center(std::size_t k, std::size_t n, unsigned precision) {
  if (k < 1 || n < 2 * k + 3) throw InputError("polygon-center needs k >= 1 and n >= 2k+3");
  const std::size_t q = 2 * k + 1, c = n - q;
  const auto ci = static_cast<std::int64_t>(c), qi = static_cast<std::int64_t>(q);
  const std::int64_t want_geq = choose2(ci) + qi * ci;
  std::string last = "no attempt";
  for (int round = 0; round < 5; ++round, precision += 4) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      auto pts = polygon(q, precision, attempt + 4 * round);
      // central points on a tiny parabola with pairwise distinct slopes
      Integer four_c;
      mpz_ui_pow_ui(four_c.get_mpz_t(), 4, static_cast<unsigned long>(c) + 1);
      Rational delta(Integer(1), four_c * 1000000 * (round + 1));
      delta.canonicalize();
      Integer x = 1;
      for (std::size_t i = 0; i < c; ++i, x *= 2) pts.emplace_back(delta * x, delta * x * x);
      try {
        auto e = measure(std::move(pts), k);
        if (e.E_k_minus_1 == qi && e.E_geq_k == want_geq && e.s == n - 2 * k - 1) return e;
        last = "counts E_{k-1} = " + std::to_string(e.E_k_minus_1) + ", E_>=k = " + std::to_string(e.E_geq_k) +
               ", s = " + std::to_string(e.s);
      } catch (const InputError& err) {
        last = err.what();
      }
    }
  }
  throw VerificationError("polygon-center construction failed: " + last);
}

EqualityConstruction build_cluster_polygon(std::size_t t, std::size_t m, const Rational& epsilon,
                                           unsigned precision) {
  if (t < 1 || m < 1) throw InputError("cluster-polygon needs t >= 1 and m >= 1");
  if (epsilon <= 0) throw InputError("epsilon must be positive");
  const std::size_t q = 2 * t + 1, n = q * m, k = t * m;
  if (n < 3) throw InputError("cluster-polygon needs at least three points");
  const auto qi = static_cast<std::int64_t>(q), mi = static_cast<std::int64_t>(m);
  Rational eps = epsilon;
  std::string last = "no attempt";
  for (int round = 0; round < 5; ++round, precision += 4, eps /= 10) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      auto verts = polygon(q, precision, attempt + 4 * round);
      std::vector<Point> pts;
      for (const auto& v : verts) {
        Point tangent(-v.y, v.x);
        for (std::size_t i = 0; i < m; ++i) {
          Rational step = eps * static_cast<long>(i);
          pts.push_back((1 - step) * v + (step * step) * tangent);
        }
      }
      try {
        auto e = measure(std::move(pts), k);
        if (e.E_k_minus_1 == qi * mi && e.E_geq_k == 2 * qi * choose2(mi) && e.s == 0) return e;
        last = "counts E_{k-1} = " + std::to_string(e.E_k_minus_1) + ", E_>=k = " + std::to_string(e.E_geq_k) +
               ", s = " + std::to_string(e.s);
      } catch (const InputError& err) {
        last = err.what();
      }
    }
  }
  throw VerificationError("cluster-polygon construction failed: " + last);
}

// ---- 3-decomposability ----

Decomposition check_3decomposable(const std::vector<Point>& points, const std::vector<int>& classes) {
  const std::size_t n = points.size();
  if (classes.size() != n || n % 3 != 0) throw InputError("partition must split the points into thirds");
  std::array<std::size_t, 3> sizes{};
  for (int c : classes) {
    if (c < 0 || c > 2) throw InputError("partition classes must be 0, 1 or 2");
    ++sizes[static_cast<std::size_t>(c)];
  }
  if (sizes[0] != n / 3 || sizes[1] != n / 3) throw InputError("partition classes must have equal size");

  // projection order changes only at normals of spanned lines
  std::vector<Point> crit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Point d = points[j] - points[i];
      Point u(-d.y, d.x);
      if (u.y < 0 || (u.y == 0 && u.x < 0)) u = Point(-u.x, -u.y);
      crit.push_back(u);
    }
  std::sort(crit.begin(), crit.end(), [](const Point& a, const Point& b) { return cross(a, b) > 0; });
  std::vector<Point> candidates;
  for (std::size_t i = 0; i < crit.size(); ++i) {
    const Point& a = crit[i];
    Point b = i + 1 < crit.size() ? crit[i + 1] : Point(-crit.front().x, -crit.front().y);
    if (cross(a, b) == 0 && i + 1 < crit.size()) continue;
    candidates.push_back(a + b);
  }
  if (candidates.empty()) candidates.emplace_back(1, 0);

  Decomposition out;
  std::vector<std::size_t> order(n);
  for (const auto& d : candidates) {
    std::vector<Rational> key(n);
    for (std::size_t i = 0; i < n; ++i) key[i] = dot(points[i], d);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    // three contiguous runs, the middle one is the class shown "between"
    std::vector<int> runs;
    for (std::size_t i : order)
      if (runs.empty() || runs.back() != classes[i]) runs.push_back(classes[i]);
    if (runs.size() != 3 || runs[0] == runs[2]) continue;
    auto& slot = out.directions[static_cast<std::size_t>(runs[1])];
    if (!slot) slot = d;
  }
  out.found = out.directions[0] && out.directions[1] && out.directions[2];
  return out;
}

}  // namespace kedge
