#include "domain_line.hpp"

#include <algorithm>

namespace tpg::detail {

namespace {

Segment occupied_at(std::size_t block, Rational offset) {
  Segment s;
  s.occupied = true;
  s.block = block;
  s.addr = {block, offset};
  return s;
}

Segment finite_run(std::size_t block, std::int64_t count) {
  Segment s;
  s.block = block;
  s.count = count;
  s.has_min = s.has_max = true;
  return s;
}

Segment infinite_run(std::size_t block, bool has_min, bool has_max) {
  Segment s;
  s.block = block;
  s.infinite = true;
  s.has_min = has_min;
  s.has_max = has_max;
  return s;
}

// Offsets 0,1,2,... ascending with `ints` occupied; `size` absent = unbounded.
std::vector<Segment> integer_layout(std::size_t block, const std::vector<std::int64_t>& ints,
                                    std::optional<std::int64_t> size) {
  std::vector<Segment> out;
  std::int64_t prev = -1;
  for (auto x : ints) {
    if (x - prev - 1 > 0) out.push_back(finite_run(block, x - prev - 1));
    out.push_back(occupied_at(block, Rational(x)));
    prev = x;
  }
  if (size) {
    if (*size - 1 - prev > 0) out.push_back(finite_run(block, *size - 1 - prev));
  } else {
    out.push_back(infinite_run(block, true, false));
  }
  return out;
}

}  // namespace

std::vector<Segment> build_line(const Position& pos) {
  const auto& domain = pos.domain();
  std::vector<Segment> line;
  for (std::size_t b = 0; b < domain.block_count(); ++b) {
    const BlockKind& kind = domain.block(b);
    std::vector<Rational> occ;
    for (const auto& a : pos.occupied())
      if (a.block == b) occ.push_back(a.offset);
    std::sort(occ.begin(), occ.end());
    std::vector<std::int64_t> ints;
    if (kind.type != BlockType::Dense)
      for (const auto& x : occ) ints.push_back(x.num());

    switch (kind.type) {
      case BlockType::Finite: {
        auto seg = integer_layout(b, ints, kind.size);
        line.insert(line.end(), seg.begin(), seg.end());
        break;
      }
      case BlockType::OmegaUp: {
        auto seg = integer_layout(b, ints, std::nullopt);
        line.insert(line.end(), seg.begin(), seg.end());
        break;
      }
      case BlockType::OmegaDown: {
        // Offset space is OmegaUp mirrored.
        auto seg = integer_layout(b, ints, std::nullopt);
        std::reverse(seg.begin(), seg.end());
        for (auto& s : seg) std::swap(s.has_min, s.has_max);
        line.insert(line.end(), seg.begin(), seg.end());
        break;
      }
      case BlockType::OmegaBi: {
        if (ints.empty()) {
          line.push_back(infinite_run(b, false, false));
          break;
        }
        line.push_back(infinite_run(b, false, true));
        for (std::size_t i = 0; i < ints.size(); ++i) {
          if (i > 0 && ints[i] - ints[i - 1] - 1 > 0)
            line.push_back(finite_run(b, ints[i] - ints[i - 1] - 1));
          line.push_back(occupied_at(b, Rational(ints[i])));
        }
        line.push_back(infinite_run(b, true, false));
        break;
      }
      case BlockType::Dense: {
        const Rational zero(0), one(1);
        if (kind.closed_min) {
          bool taken = !occ.empty() && occ.front() == zero;
          line.push_back(taken ? occupied_at(b, zero) : finite_run(b, 1));
        }
        for (const auto& x : occ) {
          if (x == zero || x == one) continue;
          line.push_back(infinite_run(b, false, false));
          line.push_back(occupied_at(b, x));
        }
        line.push_back(infinite_run(b, false, false));
        if (kind.closed_max) {
          bool taken = !occ.empty() && occ.back() == one;
          line.push_back(taken ? occupied_at(b, one) : finite_run(b, 1));
        }
        break;
      }
    }
  }
  return line;
}

}  // namespace tpg::detail
