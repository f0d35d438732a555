#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "kedge/halfperiod.hpp"
#include "kedge/rational.hpp"

namespace kedge {

// A swap at slot k or n-k is k-critical; a swap strictly inside the
// k-center (slots k+1 .. n-k-1) is a center swap, i.e. (>=k+1)-critical.

enum class SwapClass {
  augmenting,  // arriving, raises |C_0 ∩ center| to m
  neutral,     // arriving, count unchanged
  returning,
  cutting,     // departing, next critical swap of p_j is on the other side
  stalling,    // departing otherwise
  center,      // not k-critical, inside the center
  outer,       // not k-critical, outside the center
};

const char* to_string(SwapClass c);

struct TranspositionRecord {
  std::size_t step = 0;   // 1-based
  std::size_t block = 0;  // j in 0..K; tau_j opens block j
  SwapClass cls = SwapClass::outer;
  std::size_t m = 0;        // augmenting only
  std::int64_t weight = -1;  // k-critical only
  bool heavy = false;       // k-critical only
  bool essential = true;    // false only for center swaps not involving p_j after tau_1
  std::size_t entering = 0;  // p_j, k-critical only
};

struct Block {
  std::size_t index = 0;
  std::size_t first_step = 0;  // tau_j's step (B_0 starts at step 1)
  std::size_t last_step = 0;   // inclusive; equals first_step - 1 when empty
  bool has_entering = false;   // false for B_0
  std::size_t entering = 0;
  bool k_transposition = false;  // tau_j at slot k rather than n-k
};

/// K + 1 blocks cut by the K k-critical swaps.
std::vector<Block> blocks(const Halfperiod& h, std::size_t k);

/// Classifies every swap of h as given (no rearrangement).
std::vector<TranspositionRecord> classify(const Halfperiod& h, std::size_t k);

/// Moves every nonessential center swap of each block in front of tau_j
/// and replays p_j's moves monotonically. Throws VerificationError if the
/// result is not a valid halfperiod with the same block-final permutations.
Halfperiod rearrange_essential(const Halfperiod& h, std::size_t k);

struct CentralReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t s = 0;
  std::int64_t K = 0;
  std::int64_t A = 0, N = 0, R = 0, C = 0, S_light = 0, S_heavy = 0;
  std::int64_t weight_sum = 0;
  std::int64_t E_geq_k = 0;
  Rational bound_value;  // (n-2k-1) K - (s/2)(K - n + 1)
  bool holds = false;
  std::vector<std::string> auxiliary_failures;

  bool all_ok() const { return holds && auxiliary_failures.empty(); }
};

/// Main inequality on h itself; class tallies, weight bounds, cutting
/// bounds and the rest on the rearranged halfperiod.
CentralReport verify_central(const Halfperiod& h, std::size_t k);

}  // namespace kedge
