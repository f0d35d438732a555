#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kedge/geometry.hpp"

namespace kedge {

/// One adjacent swap. Labels are 0-based; position j is 1-based and means
/// the swap acts on slots (j, j+1). `first` sits at slot j before the swap.
struct Transposition {
  std::size_t step = 0;  // 1-based
  std::size_t position = 0;
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const Transposition&, const Transposition&) = default;
};

/// A sequence of adjacent transpositions starting from a permutation of
/// {0, ..., n-1}. Construction does not validate; see validate_allowable.
class Halfperiod {
 public:
  Halfperiod() = default;
  Halfperiod(std::vector<std::size_t> initial, std::vector<Transposition> swaps);

  /// Replays slot positions from `initial`, filling in the swapped labels.
  /// Throws InputError if a position is out of range.
  static Halfperiod from_positions(std::vector<std::size_t> initial,
                                   std::span<const std::size_t> positions);

  std::size_t n() const { return initial_.size(); }
  std::size_t size() const { return swaps_.size(); }
  const std::vector<std::size_t>& initial() const { return initial_; }
  const std::vector<Transposition>& transpositions() const { return swaps_; }
  const Transposition& operator[](std::size_t i) const { return swaps_[i]; }
  std::vector<std::size_t> positions() const;

  /// pi_i: the permutation after the first i swaps (pi_0 = initial).
  std::vector<std::size_t> permutation_at(std::size_t i) const;

  friend bool operator==(const Halfperiod&, const Halfperiod&) = default;

 private:
  std::vector<std::size_t> initial_;
  std::vector<Transposition> swaps_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks adjacency, labels, step numbering, that every pair swaps exactly
/// once and that the last permutation reverses the first.
ValidationReport validate_allowable(const Halfperiod& h);

/// Throws InputError carrying the first violations when h is invalid.
void require_valid(const Halfperiod& h);

struct SweepOptions {
  /// Break ties between parallel spanned lines by pair index instead of
  /// throwing DirectionTie.
  bool break_ties = false;
};

struct Sweep {
  Halfperiod halfperiod;                  // initial permutation is the identity
  std::vector<std::size_t> point_of_label;  // label -> input index
};

/// Rotates a directed line counterclockwise through half a turn and records
/// the projection order changes. Labels are ranks in the initial order.
Sweep sweep_points(std::span<const Point> points, const SweepOptions& options = {});
Halfperiod halfperiod_from_points(std::span<const Point> points, const SweepOptions& options = {});

/// Labels in slots k+1..n-k of pi_i, sorted.
std::vector<std::size_t> k_center(const Halfperiod& h, std::size_t step, std::size_t k);

struct KCenterTrace {
  std::size_t k = 0;
  std::vector<std::size_t> sizes;  // |C_0 ∩ C(k, pi_i)| for i = 0..C(n,2)
  std::size_t s_value = 0;
};

KCenterTrace compute_s(const Halfperiod& h, std::size_t k);

/// Throws InputError unless 1 <= k and 2k < n.
void require_k_range(std::size_t n, std::size_t k);

/// The halfperiod starting `shift` steps later in the same circular sequence.
Halfperiod rotate_halfperiod(const Halfperiod& h, std::size_t shift);

/// The same halfperiod traversed with the sweep direction reversed.
Halfperiod reverse_sweep(const Halfperiod& h);

/// Orientation signs implied by the swap order, indexed by label. For labels
/// a, b, c at increasing initial slots, the swap order ab, ac, bc gives +1.
OrientationTable order_type(const Halfperiod& h);

/// Text format: n, the initial permutation, then one "step position a b"
/// line per swap. Labels are 1-based on disk.
Halfperiod read_halfperiod(std::istream& in);
void write_halfperiod(std::ostream& out, const Halfperiod& h);

}  // namespace kedge
