#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kedge/geometry.hpp"
#include "kedge/halfperiod.hpp"

namespace kedge {

/// (E_0, ..., E_{floor(n/2)-1}): E_k counts spanned lines leaving exactly k
/// points on their smaller side.
struct EdgeVector {
  std::size_t n = 0;
  std::vector<std::int64_t> counts;

  std::int64_t at(std::size_t k) const { return counts.at(k); }
  std::vector<std::int64_t> leq() const;  // prefix sums E_<=k
  std::int64_t geq(std::size_t k) const;  // E_>=k
  std::int64_t total() const;
  std::int64_t halving_lines() const { return counts.empty() ? 0 : counts.back(); }

  /// Throws InputError unless the counts are nonnegative, have length
  /// floor(n/2) and sum to C(n,2).
  void require_consistent() const;

  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;
};

/// Side counting per pair with exact orientation tests, O(n^3).
EdgeVector edge_vector_bruteforce(std::span<const Point> points);

/// Counts swaps by position: slot j contributes to E_{min(j, n-j) - 1}.
EdgeVector edge_vector_from_halfperiod(const Halfperiod& h);

/// Number of 4-subsets in convex position. Work is split by first index
/// across `threads` workers (0 = hardware concurrency); the sum is exact.
std::int64_t crossings_bruteforce(const OrientationTable& table, unsigned threads = 0);
std::int64_t crossings_bruteforce(std::span<const Point> points, unsigned threads = 0);

struct IdentityForms {
  Rational form1;  // 3 C(n,4) - sum k (n-k-2) E_k
  Rational form2;  // sum (n-2k-3) E_<=k - 3/4 C(n,3) + parity term
};

IdentityForms crossings_from_edge_vector(const EdgeVector& v);

/// The E_<=k form evaluated on any vector indexed k = 0..floor(n/2)-2;
/// used with lower-bound vectors as well as exact counts.
Rational crossings_from_leq(std::size_t n, std::span<const Integer> e_leq);

struct CrossingReport {
  std::size_t n = 0;
  std::int64_t cr_bruteforce = 0;
  Rational cr_identity_form1;
  Rational cr_identity_form2;
  EdgeVector edge_vector;
  /// Point input only: the sweep-derived edge vector equals the brute-force one.
  bool routes_agree = true;

  bool consistent() const {
    return routes_agree && cr_identity_form1 == cr_bruteforce && cr_identity_form2 == cr_bruteforce;
  }
};

/// Point route: brute-force side counts and convex 4-subsets, plus the
/// sweep edge vector (parallel lines are tie-broken, which keeps E_k).
CrossingReport summarize(std::span<const Point> points);

/// Halfperiod route: positions give E_k; crossings come from the order type.
CrossingReport summarize(const Halfperiod& h);

}  // namespace kedge
