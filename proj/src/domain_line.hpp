#pragma once

// Internal: the domain laid out left to right as alternating occupied points
// and maximal free runs (per block). Consecutive occupied points with no free
// segment between them are D-adjacent.

#include <cstdint>
#include <vector>

#include "tpg/domain.hpp"

namespace tpg::detail {

struct Segment {
  bool occupied = false;
  std::size_t block = 0;
  Address addr;  // occupied segments only

  // Free segments only. Counts are >= 1.
  bool infinite = false;
  std::int64_t count = 0;
  bool has_min = false;
  bool has_max = false;
};

std::vector<Segment> build_line(const Position& pos);

}  // namespace tpg::detail
