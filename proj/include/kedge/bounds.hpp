#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kedge/rational.hpp"

namespace kedge {

/// a + b * sqrt(c) with c >= 0, compared against rationals by squaring.
struct SqrtExpr {
  Rational a;
  Rational b;
  Rational c;

  /// Sign of (this - x), exact.
  int compare(const Rational& x) const;
  Integer ceil() const;
  double approx() const;
};

/// 3C(k+2,2) + 3C(k+2-floor(n/3),2) - max(0, (k+1-floor(n/3))(n - 3 floor(n/3))).
std::int64_t aichholzer_bound(std::int64_t n, std::int64_t k);

/// u_k for first_k <= k <= last_k, with first_k = m-1, m = ceil((4n-11)/9).
struct USequence {
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::int64_t first_k = 0;
  std::vector<std::int64_t> values;

  std::int64_t last_k() const { return first_k + static_cast<std::int64_t>(values.size()) - 1; }
  std::optional<std::int64_t> at(std::int64_t k) const;
};

USequence u_sequence(std::int64_t n);

/// The recursion started at m = 17n/36 with a third binomial term.
/// Requires 36 | n.
USequence u_prime_sequence(std::int64_t n);

/// C(n,2) - (1/9) sqrt(1 - (2k+2)/n) (5n^2 + 19n - 31), for m-1 <= k <= (n-2)/2.
SqrtExpr explicit_bound(std::int64_t n, std::int64_t k);

/// Upper bound on halving lines; requires n >= 8.
std::int64_t halving_upper_bound(std::int64_t n);

enum class Pipeline { table1, section5 };
const char* to_string(Pipeline p);
Pipeline parse_pipeline(const std::string& s);

struct CrBoundResult {
  std::int64_t n = 0;
  std::int64_t value = 0;
  Rational exact_value;                // the identity's value before rounding up
  std::vector<std::int64_t> per_k;     // lower bounds on E_<=k, k = 0..floor(n/2)-2
  Pipeline pipeline = Pipeline::table1;
};

/// Plugs lower bounds on E_<=k into the E_<=k form of the crossing identity.
/// table1: aichholzer for k <= floor(n/2)-3, C(n,2) - halving bound at
/// floor(n/2)-2. section5: max(aichholzer, u_k) throughout.
CrBoundResult cr_lower_bound(std::int64_t n, Pipeline pipeline);

/// Generalized C(x,2): x(x-1)/2 for x >= 1, else 0.
Rational choose2_clamped(const Rational& x);

/// c_j = 1/2 - 1/(3j(j+1)).
Rational series_coefficient(std::int64_t j);

/// 3C(k+2,2) + 3C(k+2-n/3,2) + sum_{j=2..terms} 3j(j+1) C(k+2-c_j n, 2).
Rational series_bound(std::int64_t n, std::int64_t k, std::int64_t terms);

struct AsymptoticReport {
  double first_integral = 0;
  double second_integral = 0;
  double sum = 0;
  double first_error = 0;  // vs 86/243
  double second_error = 0;  // vs 19/729
  double sum_error = 0;     // vs 277/729
  double limit_constant = 0;  // 277/729
  double series_constant = 0;  // (2/27)(15 - pi^2)
  bool ok = false;
};

AsymptoticReport asymptotic_constants(double tolerance = 1e-9);

struct LemmaReport {
  std::int64_t n = 0;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Both bracket inequalities on (C(n,2) - u_k) / (C(n,2) - u_{m-1}) and
/// the (n-1)(n-2k-3) estimate, decided exactly.
LemmaReport lemma_brackets(std::int64_t n);

struct ComparisonReport {
  double f1_envelope = 0;
  double f2_envelope = 0;
  double explicit_value = 0;
  bool f1_below_f2 = false;
  bool both_below_explicit = false;
};

/// Requires n/3 <= k <= n/2.
ComparisonReport comparison_bounds(std::int64_t n, std::int64_t k);

struct BoundRow {
  std::int64_t k = 0;
  std::int64_t aichholzer = 0;
  std::optional<std::int64_t> u;
  std::optional<std::int64_t> u_prime;
  std::optional<SqrtExpr> explicit_value;
  std::int64_t best = 0;
  std::string source;
};

struct BoundTable {
  std::int64_t n = 0;
  std::vector<BoundRow> rows;  // k = 0..floor(n/2)-1
};

/// best = max of aichholzer, u_k and ceil(explicit); the last row is C(n,2).
/// u'_k is shown but not used for best.
BoundTable bound_table(std::int64_t n);

}  // namespace kedge
