#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace kedge::golden {

// Published values reproduced by the bound pipelines.

struct Table1Column {
  std::int64_t n;
  std::int64_t halving;
  std::int64_t crossing;
};

// Exact halving-line counts and rectilinear crossing numbers.
const std::vector<Table1Column>& table1();

struct Table2Column {
  std::int64_t n;
  std::int64_t halving_lower;  // listed for reference only
  std::int64_t halving_upper;
};

// Halving-line bounds for 28 <= n <= 33.
const std::vector<Table2Column>& table2();

// Crossing number lower bounds for 28 <= n <= 99.
const std::vector<std::pair<std::int64_t, std::int64_t>>& section5();

}  // namespace kedge::golden
