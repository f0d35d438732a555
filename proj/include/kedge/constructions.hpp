#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kedge/edge_stats.hpp"
#include "kedge/geometry.hpp"

namespace kedge {

// ---- the recursive family S_r (n = 9r) ----

struct SrConfig {
  int r = 3;
  Rational far_factor = 1000;           // starting abscissa scale for A''
  Rational segment_choice = frac(1, 2);  // where on each open segment new points go
  Rational perturbation_epsilon = frac(1, 1000000);
  unsigned precision = 40;  // decimal digits of the rotation approximation
};

/// Classes in point order: A, A', A'', B, B', B'', C, C', C''.
enum SrClass : int { cls_a, cls_a1, cls_a2, cls_b, cls_b1, cls_b2, cls_c, cls_c1, cls_c2 };

struct LabeledPointSet {
  int r = 0;
  std::vector<Point> points;
  std::vector<int> classes;  // SrClass per point

  int letter(std::size_t i) const { return classes[i] / 3; }  // 0 = a, 1 = b, 2 = c
};

struct SrBuild {
  LabeledPointSet raw;        // contains collinear triples by construction
  LabeledPointSet perturbed;  // general position
  Rational far_factor;        // the A'' scale that passed the slope certificate
  Rational epsilon;           // the perturbation that passed
  unsigned precision = 0;     // rotation digits actually used
  std::vector<std::string> certificates;  // human-readable audit trail
};

/// Builds S_r, checking properties (I)-(IV) at every recursion step, the
/// A'' slope separation and the perturbation. Escalates rotation precision
/// (doubling digits, up to four rounds) before giving up with
/// VerificationError.
SrBuild build_sr(const SrConfig& cfg);

/// Closed forms for E_<=k, its bichromatic and monochromatic parts, k <= 4r-1.
std::int64_t sr_target_leq(int r, std::int64_t k);
std::int64_t sr_target_bichromatic(int r, std::int64_t k);
std::int64_t sr_target_monochromatic(int r, std::int64_t k);

struct ColorSplit {
  std::vector<std::int64_t> bichromatic_leq;    // k = 0..floor(n/2)-1
  std::vector<std::int64_t> monochromatic_leq;
};

/// (<=k)-edge counts split by whether the endpoints share a letter.
ColorSplit count_bichromatic_monochromatic(const LabeledPointSet& s);

struct SrAudit {
  int r = 0;
  std::vector<std::int64_t> measured_leq;  // k = 0..4r-1
  std::vector<std::int64_t> target_leq;
  std::vector<std::int64_t> measured_bi, target_bi, measured_mono, target_mono;
  bool symmetric = false;  // B, C classes are the exact images of A under theta
  bool ok() const;
};

SrAudit audit_sr(const SrBuild& build);

// ---- equality constructions ----

struct EqualityConstruction {
  std::vector<Point> points;
  std::size_t k = 0;
  EdgeVector edge_vector;
  std::size_t s = 0;
  std::int64_t E_k_minus_1 = 0;
  std::int64_t E_geq_k = 0;
};

/// A (2k+1)-gon on the unit circle plus n-2k-1 points near its center.
/// Verified: E_{k-1} = 2k+1, E_>=k = C(n-2k-1,2) + (2k+1)(n-2k-1), s = n-2k-1.
EqualityConstruction build_polygon_center(std::size_t k, std::size_t n, unsigned precision = 12);

/// A (2t+1)-gon with every vertex replaced by m points on a short, slightly
/// bent radial segment; k = tm. Verified: E_{k-1} = (2t+1)m,
/// E_>=k = 2(2t+1)C(m,2), s = 0.
EqualityConstruction build_cluster_polygon(std::size_t t, std::size_t m,
                                           const Rational& epsilon = frac(1, 1000),
                                           unsigned precision = 12);

// ---- 3-decomposability ----

struct Decomposition {
  bool found = false;
  /// Side directions of the enclosing triangle; entry c shows class c between the others.
  std::array<std::optional<Point>, 3> directions;
};

/// classes[i] in {0,1,2}, equal thirds. Searches one direction strictly
/// between every pair of consecutive critical directions.
Decomposition check_3decomposable(const std::vector<Point>& points, const std::vector<int>& classes);

}  // namespace kedge
