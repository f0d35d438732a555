#include "kedge/halfperiod.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "kedge/errors.hpp"
#include "kedge/point_io.hpp"

namespace kedge {

Halfperiod::Halfperiod(std::vector<std::size_t> initial, std::vector<Transposition> swaps)
    : initial_(std::move(initial)), swaps_(std::move(swaps)) {}

Halfperiod Halfperiod::from_positions(std::vector<std::size_t> initial,
                                      std::span<const std::size_t> positions) {
  const std::size_t n = initial.size();
  std::vector<std::size_t> perm = initial;
  std::vector<Transposition> swaps;
  swaps.reserve(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    std::size_t j = positions[i];
    if (j < 1 || j >= n) throw InputError("position " + std::to_string(j) + " out of range");
    swaps.push_back({i + 1, j, perm[j - 1], perm[j]});
    std::swap(perm[j - 1], perm[j]);
  }
  return Halfperiod(std::move(initial), std::move(swaps));
}

std::vector<std::size_t> Halfperiod::positions() const {
  std::vector<std::size_t> out;
  out.reserve(swaps_.size());
  for (const auto& t : swaps_) out.push_back(t.position);
  return out;
}

std::vector<std::size_t> Halfperiod::permutation_at(std::size_t i) const {
  if (i > swaps_.size()) throw InputError("step index out of range");
  std::vector<std::size_t> perm = initial_;
  for (std::size_t t = 0; t < i; ++t) {
    std::size_t j = swaps_[t].position;
    std::swap(perm[j - 1], perm[j]);
  }
  return perm;
}

ValidationReport validate_allowable(const Halfperiod& h) {
  ValidationReport rep;
  auto& v = rep.violations;
  const std::size_t n = h.n();
  {
    std::vector<bool> seen(n, false);
    for (std::size_t x : h.initial()) {
      if (x >= n || seen[x]) {
        v.push_back("initial sequence is not a permutation of 1.." + std::to_string(n));
        return rep;
      }
      seen[x] = true;
    }
  }
  const std::size_t expected = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (h.size() != expected) {
    v.push_back("expected " + std::to_string(expected) + " transpositions, found " +
                std::to_string(h.size()));
  }
  std::vector<std::size_t> perm = h.initial();
  std::vector<unsigned> swapped(n * n, 0);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& t = h[i];
    std::string where = "step " + std::to_string(i + 1);
    if (t.step != i + 1) v.push_back(where + ": recorded step number " + std::to_string(t.step));
    if (t.position < 1 || t.position >= n) {
      v.push_back(where + ": position " + std::to_string(t.position) + " out of range");
      continue;
    }
    std::size_t a = perm[t.position - 1], b = perm[t.position];
    if (t.first != a || t.second != b) {
      v.push_back(where + ": labels " + std::to_string(t.first + 1) + "," +
                  std::to_string(t.second + 1) + " are not adjacent at slot " +
                  std::to_string(t.position));
    }
    if (++swapped[std::min(a, b) * n + std::max(a, b)] == 2) {
      v.push_back(where + ": pair " + std::to_string(std::min(a, b) + 1) + "," +
                  std::to_string(std::max(a, b) + 1) + " swapped more than once");
    }
    std::swap(perm[t.position - 1], perm[t.position]);
  }
  std::size_t missing = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) missing += swapped[a * n + b] == 0;
  if (missing > 0) v.push_back(std::to_string(missing) + " pair(s) never swapped");
  std::vector<std::size_t> rev(h.initial().rbegin(), h.initial().rend());
  if (perm != rev) v.push_back("final permutation is not the reverse of the initial one");
  return rep;
}

void require_valid(const Halfperiod& h) {
  auto rep = validate_allowable(h);
  if (rep.ok()) return;
  std::string msg = "invalid halfperiod: " + rep.violations.front();
  if (rep.violations.size() > 1) msg += " (+" + std::to_string(rep.violations.size() - 1) + " more)";
  throw InputError(msg);
}

namespace {

struct Event {
  Point dir;  // normal of the spanned line, in the upper half-plane
  std::size_t i, j;
};

}  // namespace

Sweep sweep_points(std::span<const Point> points, const SweepOptions& options) {
  PointSet ps(std::vector<Point>(points.begin(), points.end()));
  ps.require_general_position();
  const std::size_t n = points.size();

  std::vector<Event> events;
  events.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Point d = points[j] - points[i];
      Point u(-d.y, d.x);
      if (u.y < 0 || (u.y == 0 && u.x < 0)) u = Point(-u.x, -u.y);
      events.push_back({std::move(u), i, j});
    }
  // angles lie in [0, pi), so a positive cross product means a comes first
  auto before = [](const Event& a, const Event& b) {
    int c = sgn(cross(a.dir, b.dir));
    if (c != 0) return c > 0;
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  };
  std::sort(events.begin(), events.end(), before);

  std::vector<std::array<std::size_t, 4>> ties;
  for (std::size_t e = 0; e + 1 < events.size(); ++e) {
    if (cross(events[e].dir, events[e + 1].dir) == 0)
      ties.push_back({events[e].i, events[e].j, events[e + 1].i, events[e + 1].j});
  }
  if (!ties.empty() && !options.break_ties) throw DirectionTie(std::move(ties));

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (!events.empty()) {
    const Point& u = events.front().dir;
    Point rot(-u.y, u.x);
    std::vector<Rational> key1(n), key2(n);
    for (std::size_t p = 0; p < n; ++p) {
      key1[p] = dot(points[p], u);
      key2[p] = -dot(points[p], rot);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (key1[a] != key1[b]) return key1[a] < key1[b];
      return key2[a] < key2[b];
    });
  }
  std::vector<std::size_t> label(n);
  for (std::size_t r = 0; r < n; ++r) label[order[r]] = r;

  std::vector<std::size_t> perm(n), pos(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::iota(pos.begin(), pos.end(), 0);
  std::vector<Transposition> swaps;
  swaps.reserve(events.size());
  for (const auto& ev : events) {
    std::size_t a = label[ev.i], b = label[ev.j];
    std::size_t lo = std::min(pos[a], pos[b]), hi = std::max(pos[a], pos[b]);
    if (hi != lo + 1) throw Error("sweep replay lost adjacency");
    swaps.push_back({swaps.size() + 1, lo + 1, perm[lo], perm[hi]});
    std::swap(perm[lo], perm[hi]);
    pos[perm[lo]] = lo;
    pos[perm[hi]] = hi;
  }
  std::vector<std::size_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  return {Halfperiod(std::move(identity), std::move(swaps)), std::move(order)};
}

Halfperiod halfperiod_from_points(std::span<const Point> points, const SweepOptions& options) {
  return sweep_points(points, options).halfperiod;
}

void require_k_range(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k >= n) {
    throw InputError("k = " + std::to_string(k) + " out of range for n = " + std::to_string(n) +
                     " (need 1 <= k < n/2)");
  }
}

std::vector<std::size_t> k_center(const Halfperiod& h, std::size_t step, std::size_t k) {
  require_k_range(h.n(), k);
  auto perm = h.permutation_at(step);
  std::vector<std::size_t> c(perm.begin() + k, perm.end() - k);
  std::sort(c.begin(), c.end());
  return c;
}

KCenterTrace compute_s(const Halfperiod& h, std::size_t k) {
  const std::size_t n = h.n();
  require_k_range(n, k);
  std::vector<bool> in_c0(n, false);
  for (std::size_t slot = k; slot < n - k; ++slot) in_c0[h.initial()[slot]] = true;

  KCenterTrace tr;
  tr.k = k;
  std::size_t count = n - 2 * k;
  tr.sizes.reserve(h.size() + 1);
  tr.sizes.push_back(count);
  for (const auto& t : h.transpositions()) {
    // only swaps across the center boundary change membership
    if (t.position == k) {
      count += in_c0[t.first];
      count -= in_c0[t.second];
    } else if (t.position == n - k) {
      count += in_c0[t.second];
      count -= in_c0[t.first];
    }
    tr.sizes.push_back(count);
  }
  tr.s_value = *std::min_element(tr.sizes.begin(), tr.sizes.end());
  return tr;
}

Halfperiod rotate_halfperiod(const Halfperiod& h, std::size_t shift) {
  const std::size_t n = h.n();
  if (h.size() == 0) return h;
  std::vector<std::size_t> pos = h.positions();
  std::vector<std::size_t> initial = h.initial();
  for (std::size_t r = 0; r < shift; ++r) {
    std::size_t j = pos.front();
    std::swap(initial[j - 1], initial[j]);
    pos.erase(pos.begin());
    pos.push_back(n - j);
  }
  return Halfperiod::from_positions(std::move(initial), pos);
}

Halfperiod reverse_sweep(const Halfperiod& h) {
  const std::size_t n = h.n();
  std::vector<std::size_t> pos;
  pos.reserve(h.size());
  for (auto it = h.transpositions().rbegin(); it != h.transpositions().rend(); ++it)
    pos.push_back(n - it->position);
  return Halfperiod::from_positions(h.initial(), pos);
}

OrientationTable order_type(const Halfperiod& h) {
  require_valid(h);
  const std::size_t n = h.n();
  std::vector<std::size_t> when(n * n, 0);
  for (const auto& t : h.transpositions()) {
    when[t.first * n + t.second] = t.step;
    when[t.second * n + t.first] = t.step;
  }
  std::vector<std::size_t> slot(n);
  for (std::size_t i = 0; i < n; ++i) slot[h.initial()[i]] = i;

  return OrientationTable::from_sorted_triples(n, [&](std::size_t i, std::size_t j, std::size_t k) {
    std::array<std::size_t, 3> v{i, j, k};
    // sort by initial slot, tracking the parity of the reordering
    int parity = 1;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b + 1 < 3 - a; ++b)
        if (slot[v[b]] > slot[v[b + 1]]) {
          std::swap(v[b], v[b + 1]);
          parity = -parity;
        }
    std::size_t x = v[0], y = v[1], z = v[2];
    // the first swap of the three decides the order: xy first gives +1
    int s = when[x * n + y] < when[y * n + z] ? 1 : -1;
    return s * parity;
  });
}

Halfperiod read_halfperiod(std::istream& in) {
  auto lines = content_lines(in);
  if (lines.size() < 2) throw InputError("halfperiod file is too short");
  long long n = 0;
  {
    std::istringstream head(lines[0]);
    if (!(head >> n) || n < 1) throw InputError("bad count line '" + lines[0] + "'");
  }
  auto label = [n](long long v, const std::string& line) {
    if (v < 1 || v > n) throw InputError("label out of range in '" + line + "'");
    return static_cast<std::size_t>(v - 1);
  };
  std::vector<std::size_t> initial;
  {
    std::istringstream row(lines[1]);
    long long v;
    while (row >> v) initial.push_back(label(v, lines[1]));
    if (!row.eof() || initial.size() != static_cast<std::size_t>(n))
      throw InputError("bad initial permutation line '" + lines[1] + "'");
  }
  std::vector<Transposition> swaps;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    std::istringstream row(lines[i]);
    long long step, position, a, b;
    std::string extra;
    if (!(row >> step >> position >> a >> b) || (row >> extra) || step < 1 || position < 0)
      throw InputError("bad transposition line '" + lines[i] + "'");
    swaps.push_back({static_cast<std::size_t>(step), static_cast<std::size_t>(position),
                     label(a, lines[i]), label(b, lines[i])});
  }
  return Halfperiod(std::move(initial), std::move(swaps));
}

void write_halfperiod(std::ostream& out, const Halfperiod& h) {
  out << h.n() << '\n';
  for (std::size_t i = 0; i < h.n(); ++i) out << (i ? " " : "") << h.initial()[i] + 1;
  out << '\n';
  for (const auto& t : h.transpositions())
    out << t.step << ' ' << t.position << ' ' << t.first + 1 << ' ' << t.second + 1 << '\n';
}

}  // namespace kedge
