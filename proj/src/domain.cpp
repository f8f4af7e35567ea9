#include "tpg/domain.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

#include "domain_line.hpp"
#include "tpg/errors.hpp"

namespace tpg {

BlockKind BlockKind::finite(std::int64_t k) {
  if (k < 1) throw InvalidInput("finite block size must be >= 1");
  return {BlockType::Finite, k};
}

bool BlockKind::has_min() const {
  switch (type) {
    case BlockType::Finite:
    case BlockType::OmegaUp:
      return true;
    case BlockType::OmegaDown:
    case BlockType::OmegaBi:
      return false;
    case BlockType::Dense:
      return closed_min;
  }
  return false;
}

bool BlockKind::has_max() const {
  switch (type) {
    case BlockType::Finite:
    case BlockType::OmegaDown:
      return true;
    case BlockType::OmegaUp:
    case BlockType::OmegaBi:
      return false;
    case BlockType::Dense:
      return closed_max;
  }
  return false;
}

std::int64_t DomainDescriptor::finite_size() const {
  if (!is_finite()) throw InvalidInput("domain is not finite");
  return blocks_[0].size;
}

namespace {

// Merges one adjacent (has_max, has_min) pair into the blocks it becomes.
std::vector<BlockKind> merge_pair(const BlockKind& left, const BlockKind& right) {
  using T = BlockType;
  if (left.type == T::Dense && right.type == T::Dense) {
    // The two closed endpoints form a two-point D-block between open parts.
    return {BlockKind::dense(left.closed_min, false), BlockKind::finite(2),
            BlockKind::dense(false, right.closed_max)};
  }
  if (left.type == T::Dense) {
    BlockKind l = BlockKind::dense(left.closed_min, false);
    if (right.type == T::Finite) return {l, BlockKind::finite(right.size + 1)};
    return {l, right};  // OmegaUp absorbs the endpoint
  }
  if (right.type == T::Dense) {
    BlockKind r = BlockKind::dense(false, right.closed_max);
    if (left.type == T::Finite) return {BlockKind::finite(left.size + 1), r};
    return {left, r};  // OmegaDown absorbs the endpoint
  }
  if (left.type == T::Finite && right.type == T::Finite)
    return {BlockKind::finite(left.size + right.size)};
  if (left.type == T::Finite) return {BlockKind::omega_up()};
  if (right.type == T::Finite) return {BlockKind::omega_down()};
  return {BlockKind::omega_bi()};  // OmegaDown + OmegaUp
}

}  // namespace

DomainDescriptor normalize_domain(std::vector<BlockKind> raw) {
  if (raw.empty()) throw InvalidInput("domain needs at least one block");
  for (const auto& b : raw) {
    if (b.type == BlockType::Finite && b.size < 1)
      throw InvalidInput("finite block size must be >= 1");
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
      if (raw[i].has_max() && raw[i + 1].has_min()) {
        auto merged = merge_pair(raw[i], raw[i + 1]);
        raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(i),
                  raw.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        raw.insert(raw.begin() + static_cast<std::ptrdiff_t>(i), merged.begin(), merged.end());
        changed = true;
        break;
      }
    }
  }
  return DomainDescriptor(std::move(raw));
}

DomainDescriptor finite_domain(std::int64_t d) { return normalize_domain({BlockKind::finite(d)}); }

namespace {

class DomainParser {
 public:
  explicit DomainParser(std::string_view text) : text_(text) {}

  std::vector<BlockKind> parse() {
    if (text_.substr(0, 7) == "finite:") {
      pos_ = 7;
      std::int64_t k = integer();
      expect_end();
      if (k < 1) fail("finite size must be >= 1");
      return {BlockKind::finite(k)};
    }
    std::vector<BlockKind> blocks;
    blocks.push_back(block());
    while (pos_ < text_.size()) {
      if (text_[pos_] != ',') fail("expected ','");
      ++pos_;
      blocks.push_back(block());
    }
    return blocks;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput("domain syntax error at column " + std::to_string(pos_ + 1) + ": " +
                       what + " in '" + std::string(text_) + "'");
  }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    std::int64_t v = 0;
    auto begin = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == begin) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return v;
  }

  bool closedness() {
    if (accept("c")) return true;
    if (accept("o")) return false;
    fail("expected 'o' or 'c'");
  }

  BlockKind block() {
    if (accept("w+")) return BlockKind::omega_up();
    if (accept("w-")) return BlockKind::omega_down();
    if (accept("z")) return BlockKind::omega_bi();
    if (accept("dense(")) {
      bool lo = closedness();
      bool hi = closedness();
      if (!accept(")")) fail("expected ')'");
      return BlockKind::dense(lo, hi);
    }
    if (accept("f")) {
      std::int64_t k = integer();
      if (k < 1) fail("finite size must be >= 1");
      return BlockKind::finite(k);
    }
    fail("expected a block (f<k>, w+, w-, z, dense(..))");
  }

  void expect_end() {
    if (pos_ != text_.size()) fail("unexpected trailing input");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_block(const BlockKind& b) {
  switch (b.type) {
    case BlockType::Finite:
      return "f" + std::to_string(b.size);
    case BlockType::OmegaUp:
      return "w+";
    case BlockType::OmegaDown:
      return "w-";
    case BlockType::OmegaBi:
      return "z";
    case BlockType::Dense:
      return std::string("dense(") + (b.closed_min ? 'c' : 'o') + (b.closed_max ? 'c' : 'o') + ")";
  }
  return "?";
}

}  // namespace

DomainDescriptor parse_domain(std::string_view text, bool* normalized) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact.push_back(c);
  auto raw = DomainParser(compact).parse();
  auto domain = normalize_domain(raw);
  if (normalized) *normalized = domain.blocks() != raw;
  return domain;
}

std::string render_domain(const DomainDescriptor& domain) {
  if (domain.is_finite()) return "finite:" + std::to_string(domain.finite_size());
  std::string out;
  for (const auto& b : domain.blocks()) {
    if (!out.empty()) out += ',';
    out += render_block(b);
  }
  return out;
}

std::strong_ordering compare(const DomainDescriptor& domain, const Address& a,
                             const Address& b) {
  if (a.block != b.block) return a.block <=> b.block;
  if (domain.block(a.block).type == BlockType::OmegaDown) return b.offset <=> a.offset;
  return a.offset <=> b.offset;
}

bool is_valid_address(const DomainDescriptor& domain, const Address& a) {
  if (a.block >= domain.block_count()) return false;
  const BlockKind& b = domain.block(a.block);
  const Rational& x = a.offset;
  switch (b.type) {
    case BlockType::Finite:
      return x.is_integer() && x.num() >= 0 && x.num() < b.size;
    case BlockType::OmegaUp:
    case BlockType::OmegaDown:
      return x.is_integer() && x.num() >= 0;
    case BlockType::OmegaBi:
      return x.is_integer();
    case BlockType::Dense:
      if (x == Rational(0)) return b.closed_min;
      if (x == Rational(1)) return b.closed_max;
      return x > Rational(0) && x < Rational(1);
  }
  return false;
}

Address parse_address(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return {0, Rational::parse(text)};
  std::size_t block = 0;
  auto head = text.substr(0, colon);
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), block);
  if (head.empty() || ec != std::errc() || ptr != head.data() + head.size())
    throw InvalidInput("bad address '" + std::string(text) + "'");
  return {block, Rational::parse(text.substr(colon + 1))};
}

std::string render_address(const Address& a) {
  return std::to_string(a.block) + ":" + a.offset.str();
}

std::vector<Address> parse_address_list(std::string_view text) {
  std::vector<Address> out;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) out.push_back(parse_address(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token.push_back(c);
  }
  flush();
  return out;
}

Position::Position(DomainDescriptor domain, std::vector<Address> occupied, Parity parity,
                   std::int64_t remaining)
    : domain_(std::move(domain)),
      occupied_(std::move(occupied)),
      parity_(parity),
      remaining_(remaining) {
  if (remaining_ < 0) throw InvalidInput("remaining turns must be >= 0");
  for (const auto& a : occupied_) {
    if (!is_valid_address(domain_, a))
      throw InvalidInput("address " + render_address(a) + " is not in the domain");
  }
  std::sort(occupied_.begin(), occupied_.end(), [this](const Address& a, const Address& b) {
    return compare(domain_, a, b) < 0;
  });
  if (std::adjacent_find(occupied_.begin(), occupied_.end()) != occupied_.end())
    throw InvalidInput("occupied addresses must be distinct");
  if (domain_.is_finite() &&
      domain_.finite_size() < static_cast<std::int64_t>(occupied_.size()) + remaining_)
    throw InvalidInput("domain too small: need |D| >= |occupied| + remaining");
}

bool Position::is_free(const Address& a) const {
  if (!is_valid_address(domain_, a)) return false;
  return !std::binary_search(
      occupied_.begin(), occupied_.end(), a,
      [this](const Address& x, const Address& y) { return compare(domain_, x, y) < 0; });
}

std::int64_t Position::count_greater(const Address& a) const {
  auto it = std::upper_bound(
      occupied_.begin(), occupied_.end(), a,
      [this](const Address& x, const Address& y) { return compare(domain_, x, y) < 0; });
  return static_cast<std::int64_t>(occupied_.end() - it);
}

Position finite_position(std::int64_t d, const std::vector<std::int64_t>& elements,
                         std::int64_t remaining, Parity parity) {
  std::vector<Address> occ;
  for (auto e : elements) occ.push_back({0, Rational(e - 1)});
  return Position(finite_domain(d), std::move(occ), parity, remaining);
}

std::vector<SBlock> s_blocks(const Position& pos) {
  const auto line = detail::build_line(pos);
  std::vector<SBlock> out;
  bool seen_free = false;
  for (std::size_t i = 0; i < line.size();) {
    if (!line[i].occupied) {
      seen_free = true;
      ++i;
      continue;
    }
    SBlock sb;
    sb.block_index = line[i].block;
    sb.lowest = line[i].addr;
    sb.touches_domain_min = (i == 0);
    std::size_t j = i;
    // Dense points are never D-adjacent; the line always separates them by a
    // free gap, and runs never continue across blocks.
    while (j < line.size() && line[j].occupied && line[j].block == sb.block_index) {
      sb.highest = line[j].addr;
      ++sb.size;
      ++j;
    }
    sb.touches_domain_max = (j == line.size());
    bool free_above = false;
    for (std::size_t k = j; k < line.size() && !free_above; ++k) free_above = !line[k].occupied;
    sb.is_pivot = (sb.size % 2 == 1) && seen_free && free_above;
    out.push_back(sb);
    i = j;
  }
  return out;
}

FeatureSet features(const Position& pos) {
  const auto line = detail::build_line(pos);
  const auto blocks = s_blocks(pos);
  const auto& domain = pos.domain();
  FeatureSet f;

  for (const auto& sb : blocks) {
    if (sb.is_pivot) ++f.pivot_count;
    if (sb.touches_domain_max) f.end_block_size = sb.size;
    if (sb.touches_domain_min) f.beginning_block_size = sb.size;
  }

  const detail::Segment* first_free = nullptr;
  const detail::Segment* last_free = nullptr;
  for (const auto& seg : line) {
    if (seg.occupied) continue;
    if (!first_free) first_free = &seg;
    last_free = &seg;
    if (seg.infinite)
      f.free_count.infinite = true;
    else
      f.free_count.value += seg.count;
  }
  f.min_free_exists = first_free && first_free->has_min;
  f.max_free_exists = last_free && last_free->has_max;

  // Free segments per block, and whether any free element lies strictly
  // before / after each block.
  const std::size_t nb = domain.block_count();
  std::vector<std::vector<const detail::Segment*>> frees(nb);
  for (const auto& seg : line)
    if (!seg.occupied) frees[seg.block].push_back(&seg);
  std::vector<bool> free_before(nb, false), free_after(nb, false);
  for (std::size_t b = 1; b < nb; ++b) free_before[b] = free_before[b - 1] || !frees[b - 1].empty();
  for (std::size_t b = nb - 1; b-- > 0;) free_after[b] = free_after[b + 1] || !frees[b + 1].empty();

  for (std::size_t b = 0; b < nb; ++b) {
    const BlockKind& kind = domain.block(b);
    if (kind.type != BlockType::Dense) {
      DBlockFeature d;
      d.block_index = b;
      d.is_finite = kind.type == BlockType::Finite;
      d.is_exhausted = frees[b].empty();
      d.has_smallest_free = !frees[b].empty() && frees[b].front()->has_min;
      d.has_largest_free = !frees[b].empty() && frees[b].back()->has_max;
      d.is_central = free_before[b] && free_after[b];
      d.is_fnedb = d.is_finite && !d.is_exhausted;
      d.is_leftmost = (b == 0) && kind.has_min();
      d.is_rightmost = (b == nb - 1) && kind.has_max();
      f.dblocks.push_back(d);
      continue;
    }
    auto endpoint = [&](DBlockFeature::Origin origin, const Rational& at) {
      DBlockFeature d;
      d.origin = origin;
      d.block_index = b;
      d.is_finite = true;
      bool free = pos.is_free({b, at});
      d.is_exhausted = !free;
      d.has_smallest_free = d.has_largest_free = d.is_fnedb = free;
      // The open interior always has free points next to an endpoint.
      if (origin == DBlockFeature::Origin::DenseMin) {
        d.is_central = free_before[b];
        d.is_leftmost = (b == 0);
      } else {
        d.is_central = free_after[b];
        d.is_rightmost = (b == nb - 1);
      }
      f.dblocks.push_back(d);
    };
    if (kind.closed_min) endpoint(DBlockFeature::Origin::DenseMin, Rational(0));
    DBlockFeature interior;
    interior.origin = DBlockFeature::Origin::DenseInterior;
    interior.block_index = b;
    interior.infinitely_many = true;
    interior.is_finite = true;
    interior.has_smallest_free = interior.has_largest_free = true;
    interior.is_central = true;
    interior.is_fnedb = true;
    f.dblocks.push_back(interior);
    if (kind.closed_max) endpoint(DBlockFeature::Origin::DenseMax, Rational(1));
  }

  int smallest = 0, largest = 0;
  for (const auto& d : f.dblocks) {
    int weight = d.infinitely_many ? 2 : 1;
    if (d.has_smallest_free) smallest += weight;
    if (d.has_largest_free) largest += weight;
  }
  f.some_smallest_free = smallest >= 1;
  f.some_largest_free = largest >= 1;
  // When min(D\S) exists it is the smallest free element of its own D-block,
  // so a different choice needs a second D-block.
  f.choosable_m_not_min = f.min_free_exists ? smallest >= 2 : smallest >= 1;
  f.choosable_M_not_max = f.max_free_exists ? largest >= 2 : largest >= 1;
  return f;
}

namespace {

// Adds representatives of the integer run [a, b] (b absent = unbounded above)
// in offset space.
void add_run(std::vector<std::int64_t>& out, std::int64_t a, std::optional<std::int64_t> b,
             int bound) {
  if (!b) {
    for (std::int64_t j = 0; j <= bound; ++j) out.push_back(a + j);
    return;
  }
  if (*b < a) return;
  if (*b - a + 1 <= 2 * static_cast<std::int64_t>(bound) + 2) {
    for (std::int64_t x = a; x <= *b; ++x) out.push_back(x);
    return;
  }
  for (std::int64_t j = 0; j <= bound; ++j) {
    out.push_back(a + j);
    out.push_back(*b - j);
  }
}

}  // namespace

std::vector<Address> canonical_moves(const Position& pos, int bound) {
  if (pos.remaining() < 1) throw InvalidInput("canonical_moves: no turns left");
  if (bound < 1) throw InvalidInput("canonical_moves: bound must be positive");
  const auto& domain = pos.domain();
  std::vector<Address> out;
  for (std::size_t b = 0; b < domain.block_count(); ++b) {
    const BlockKind& kind = domain.block(b);
    std::vector<Rational> occ;
    for (const auto& a : pos.occupied())
      if (a.block == b) occ.push_back(a.offset);
    std::sort(occ.begin(), occ.end());

    if (kind.type == BlockType::Dense) {
      std::vector<Rational> cuts{Rational(0)};
      for (const auto& x : occ)
        if (x > Rational(0) && x < Rational(1)) cuts.push_back(x);
      cuts.push_back(Rational(1));
      if (kind.closed_min && pos.is_free({b, Rational(0)})) out.push_back({b, Rational(0)});
      for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        out.push_back({b, (cuts[i] + cuts[i + 1]).halved()});
      if (kind.closed_max && pos.is_free({b, Rational(1)})) out.push_back({b, Rational(1)});
      continue;
    }

    std::vector<std::int64_t> ints;
    for (const auto& x : occ) ints.push_back(x.num());
    std::vector<std::int64_t> picks;
    if (kind.type == BlockType::OmegaBi) {
      if (ints.empty()) {
        picks.push_back(0);
      } else {
        for (std::int64_t j = 0; j <= bound; ++j) picks.push_back(ints.front() - 1 - j);
        for (std::size_t i = 0; i + 1 < ints.size(); ++i)
          add_run(picks, ints[i] + 1, ints[i + 1] - 1, bound);
        add_run(picks, ints.back() + 1, std::nullopt, bound);
      }
    } else {
      // Finite, OmegaUp, and OmegaDown (in offset space, which counts down
      // from the maximum) all start at offset 0.
      std::int64_t start = 0;
      for (auto x : ints) {
        add_run(picks, start, x - 1, bound);
        start = x + 1;
      }
      if (kind.type == BlockType::Finite)
        add_run(picks, start, kind.size - 1, bound);
      else
        add_run(picks, start, std::nullopt, bound);
    }
    for (auto x : picks) out.push_back({b, Rational(x)});
  }
  std::sort(out.begin(), out.end(), [&](const Address& x, const Address& y) {
    return compare(domain, x, y) < 0;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Address> all_free_moves(const Position& pos) {
  const std::int64_t d = pos.domain().finite_size();
  std::vector<Address> out;
  for (std::int64_t x = 0; x < d; ++x) {
    Address a{0, Rational(x)};
    if (pos.is_free(a)) out.push_back(a);
  }
  return out;
}

Position apply_move(const Position& pos, const Address& move) {
  if (pos.remaining() < 1) throw IllegalMove("no turns left");
  if (!is_valid_address(pos.domain(), move))
    throw IllegalMove("address " + render_address(move) + " is not in the domain");
  if (!pos.is_free(move)) throw IllegalMove("address " + render_address(move) + " is occupied");
  auto occ = pos.occupied();
  occ.push_back(move);
  Parity parity = pos.parity() + append_parity_delta(static_cast<std::uint64_t>(pos.count_greater(move)));
  return Position(pos.domain(), std::move(occ), parity, pos.remaining() - 1);
}

}  // namespace tpg
