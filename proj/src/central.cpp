#include "kedge/central.hpp"

#include <algorithm>

#include "kedge/edge_stats.hpp"
#include "kedge/errors.hpp"

namespace kedge {

const char* to_string(SwapClass c) {
  switch (c) {
    case SwapClass::augmenting: return "augmenting";
    case SwapClass::neutral: return "neutral";
    case SwapClass::returning: return "returning";
    case SwapClass::cutting: return "cutting";
    case SwapClass::stalling: return "stalling";
    case SwapClass::center: return "center";
    case SwapClass::outer: return "outer";
  }
  return "?";
}

namespace {

enum Region : std::uint8_t { left, middle, right };

bool is_critical(std::size_t n, std::size_t k, std::size_t pos) { return pos == k || pos == n - k; }
bool in_center(std::size_t n, std::size_t k, std::size_t pos) { return pos >= k + 1 && pos + k + 1 <= n; }

std::vector<Region> initial_regions(const Halfperiod& h, std::size_t k) {
  const std::size_t n = h.n();
  std::vector<Region> r(n);
  for (std::size_t slot = 0; slot < n; ++slot)
    r[h.initial()[slot]] = slot < k ? left : (slot < n - k ? middle : right);
  return r;
}

std::vector<std::vector<std::size_t>> all_permutations(const std::vector<std::size_t>& initial,
                                                        const std::vector<std::size_t>& pos) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(pos.size() + 1);
  out.push_back(initial);
  for (std::size_t j : pos) {
    auto p = out.back();
    std::swap(p[j - 1], p[j]);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<Block> blocks(const Halfperiod& h, std::size_t k) {
  require_valid(h);
  const std::size_t n = h.n();
  require_k_range(n, k);
  std::vector<Block> out(1);
  out[0].first_step = 1;
  for (const auto& t : h.transpositions()) {
    if (!is_critical(n, k, t.position)) continue;
    out.back().last_step = t.step - 1;
    Block b;
    b.index = out.size();
    b.first_step = t.step;
    b.has_entering = true;
    b.k_transposition = t.position == k;
    b.entering = b.k_transposition ? t.first : t.second;
    out.push_back(b);
  }
  out.back().last_step = h.size();
  return out;
}

std::vector<TranspositionRecord> classify(const Halfperiod& h, std::size_t k) {
  require_valid(h);
  const std::size_t n = h.n();
  require_k_range(n, k);
  const auto region = initial_regions(h, k);
  const auto trace = compute_s(h, k);
  const auto s = static_cast<std::int64_t>(trace.s_value);
  const auto& sw = h.transpositions();
  const std::size_t total = sw.size();

  std::vector<TranspositionRecord> recs(total);
  std::size_t block = 0, pj = 0, opener = 0;
  for (std::size_t t = 0; t < total; ++t) {
    const auto& tr = sw[t];
    auto& rec = recs[t];
    rec.step = tr.step;
    if (is_critical(n, k, tr.position)) {
      ++block;
      opener = t;
      const bool ktr = tr.position == k;
      pj = ktr ? tr.first : tr.second;
      rec.entering = pj;
      rec.weight = 0;
      if (region[pj] == middle) {
        if (trace.sizes[t + 1] == trace.sizes[t] + 1) {
          rec.cls = SwapClass::augmenting;
          rec.m = trace.sizes[t + 1];
        } else {
          rec.cls = SwapClass::neutral;
        }
      } else if ((ktr && region[pj] == right) || (!ktr && region[pj] == left)) {
        rec.cls = SwapClass::returning;
      } else {
        rec.cls = SwapClass::stalling;
        for (std::size_t u = t + 1; u < total; ++u) {
          if (!is_critical(n, k, sw[u].position)) continue;
          if (sw[u].first != pj && sw[u].second != pj) continue;
          if ((sw[u].position == k) != ktr) rec.cls = SwapClass::cutting;
          break;
        }
      }
    } else if (in_center(n, k, tr.position)) {
      rec.cls = SwapClass::center;
      rec.essential = block == 0 || tr.first == pj || tr.second == pj;
      if (block > 0 && !(region[tr.first] == middle && region[tr.second] == middle))
        ++recs[opener].weight;
    } else {
      rec.cls = SwapClass::outer;
    }
    rec.block = block;
  }
  const std::int64_t light_cap = static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(k) - 1 - s;
  for (auto& rec : recs)
    if (rec.weight >= 0) rec.heavy = rec.weight > light_cap;
  return recs;
}

Halfperiod rearrange_essential(const Halfperiod& h, std::size_t k) {
  require_valid(h);
  const std::size_t n = h.n();
  require_k_range(n, k);
  std::vector<std::size_t> pos = h.positions();

  auto critical_indices = [&] {
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < pos.size(); ++t)
      if (is_critical(n, k, pos[t])) idx.push_back(t);
    return idx;
  };
  auto idx = critical_indices();
  // Later blocks first, so earlier indices stay put while we work.
  for (std::size_t jj = idx.size(); jj-- > 0;) {
    const auto perms = all_permutations(h.initial(), pos);
    const std::size_t i0 = idx[jj];
    const std::size_t i1 = jj + 1 < idx.size() ? idx[jj + 1] : pos.size();
    const std::size_t sj = pos[i0];
    const bool ktr = sj == k;
    const std::size_t pj = ktr ? perms[i0][k - 1] : perms[i0][n - k];

    std::vector<std::size_t> nonessential, outer;
    for (std::size_t t = i0 + 1; t < i1; ++t) {
      const std::size_t st = pos[t];
      if (in_center(n, k, st)) {
        if (perms[t][st - 1] != pj && perms[t][st] != pj) nonessential.push_back(t);
      } else {
        outer.push_back(pos[t]);
      }
    }
    if (nonessential.empty()) continue;

    std::vector<std::size_t> block;
    // Replay the nonessential swaps on the center with p_j removed. Before
    // tau_j that sequence occupies slots k+2..n-k (k-swap) or k+1..n-k-1.
    const std::size_t base = ktr ? k + 2 : k + 1;
    for (std::size_t t : nonessential) {
      const auto& p = perms[t];
      const std::size_t a = p[pos[t] - 1];
      std::size_t rank = 0;
      for (std::size_t slot = k; slot < n - k; ++slot) {
        if (p[slot] == pj) continue;
        if (p[slot] == a) break;
        ++rank;
      }
      block.push_back(base + rank);
    }
    block.push_back(sj);
    const auto& final_perm = perms[i1];
    const std::size_t target =
        static_cast<std::size_t>(std::find(final_perm.begin(), final_perm.end(), pj) - final_perm.begin());
    const std::size_t start = ktr ? k : n - k - 1;  // p_j's 0-based slot after tau_j
    if (target > start) {
      for (std::size_t x = start; x < target; ++x) block.push_back(x + 1);
    } else {
      for (std::size_t x = start; x > target; --x) block.push_back(x);
    }
    block.insert(block.end(), outer.begin(), outer.end());

    std::vector<std::size_t> next(pos.begin(), pos.begin() + static_cast<std::ptrdiff_t>(i0));
    next.insert(next.end(), block.begin(), block.end());
    next.insert(next.end(), pos.begin() + static_cast<std::ptrdiff_t>(i1), pos.end());

    auto check = perms[i0];
    for (std::size_t j : block) {
      if (j < 1 || j >= n) throw VerificationError("rearrangement produced an out-of-range slot");
      std::swap(check[j - 1], check[j]);
    }
    if (check != final_perm) {
      throw VerificationError("rearranged block " + std::to_string(jj + 1) +
                              " does not end in the original block-final permutation");
    }
    pos = std::move(next);
    idx = critical_indices();
  }
  auto lambda = Halfperiod::from_positions(h.initial(), pos);
  auto rep = validate_allowable(lambda);
  if (!rep.ok()) throw VerificationError("rearranged halfperiod is invalid: " + rep.violations.front());
  return lambda;
}

CentralReport verify_central(const Halfperiod& h, std::size_t k) {
  const auto ev = edge_vector_from_halfperiod(h);
  const std::size_t n = h.n();
  require_k_range(n, k);
  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(k);

  CentralReport rep;
  rep.n = n;
  rep.k = k;
  rep.s = compute_s(h, k).s_value;
  rep.K = ev.at(k - 1);
  rep.E_geq_k = ev.geq(k);
  const auto s = static_cast<std::int64_t>(rep.s);
  rep.bound_value = Rational((nn - 2 * kk - 1) * rep.K) - frac(s, 2) * Rational(rep.K - nn + 1);
  rep.holds = Rational(rep.E_geq_k) <= rep.bound_value;

  auto& fail = rep.auxiliary_failures;
  auto require = [&fail](bool ok, const std::string& what) {
    if (!ok) fail.push_back(what);
  };

  Halfperiod lambda;
  try {
    lambda = rearrange_essential(h, k);
  } catch (const VerificationError& e) {
    fail.push_back(e.what());
    return rep;
  }
  const auto ev_l = edge_vector_from_halfperiod(lambda);
  bool prefix = true;
  for (std::size_t j = 0; j < k; ++j) prefix = prefix && ev_l.at(j) == ev.at(j);
  require(prefix, "rearrangement changed E_j for some j <= k-1");
  require(ev_l.geq(k) == rep.E_geq_k, "rearrangement changed E_>=k");
  require(compute_s(lambda, k).s_value == rep.s, "rearrangement changed s");

  const auto recs = classify(lambda, k);
  const std::int64_t cap = nn - 2 * kk - 1;
  const std::int64_t light = cap - s;
  std::vector<bool> augmenting_m(n + 1, false);
  std::int64_t aug_heavy_weight = 0;
  for (const auto& r : recs) {
    if (r.cls == SwapClass::center) {
      require(r.essential, "nonessential center swap left at step " + std::to_string(r.step));
      continue;
    }
    if (r.weight < 0) continue;
    const std::int64_t w = r.weight;
    const std::string at = " at step " + std::to_string(r.step);
    rep.weight_sum += w;
    require(w <= cap, "weight above n-2k-1" + at);
    switch (r.cls) {
      case SwapClass::augmenting:
        ++rep.A;
        augmenting_m[r.m] = true;
        aug_heavy_weight += w;
        require(w <= nn - 2 * kk - static_cast<std::int64_t>(r.m), "augmenting weight above n-2k-m" + at);
        break;
      case SwapClass::neutral:
        ++rep.N;
        require(w <= nn - 2 * kk - s, "neutral weight above n-2k-s" + at);
        break;
      case SwapClass::returning:
        ++rep.R;
        require(w <= light, "returning weight above n-2k-1-s" + at);
        break;
      case SwapClass::cutting:
        ++rep.C;
        break;
      case SwapClass::stalling:
        if (r.heavy) {
          ++rep.S_heavy;
          aug_heavy_weight += w;
        } else {
          ++rep.S_light;
        }
        break;
      default:
        break;
    }
  }
  require(rep.A + rep.N + rep.R + rep.C + rep.S_light + rep.S_heavy == rep.K, "class tallies do not sum to K");
  require(rep.C >= 2 * kk, "fewer than 2k cutting swaps");
  require(2 * rep.C <= 4 * kk + rep.K - nn + s, "cutting bound 2C <= 4k + K - n + s fails");
  for (std::int64_t m = s + 1; m <= nn - 2 * kk; ++m)
    require(augmenting_m[static_cast<std::size_t>(m)], "no " + std::to_string(m) + "-augmenting swap");
  require(rep.E_geq_k <= choose2(nn - 2 * kk) - rep.N + rep.weight_sum, "degree count bound fails");
  require(aug_heavy_weight <= light * (rep.A + rep.S_heavy) - choose2(nn - 2 * kk - s),
          "augmenting plus heavy weight bound fails");
  require(rep.K >= std::max(2 * kk + 1, nn - s), "E_{k-1} below max(2k+1, n-s)");
  require(rep.E_geq_k <= cap * rep.K + choose2(s), "E_>=k above (n-2k-1)E_{k-1} + C(s,2)");
  return rep;
}

}  // namespace kedge
