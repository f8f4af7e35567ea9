#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tpg/order.hpp"
#include "tpg/player.hpp"
#include "tpg/rational.hpp"

namespace tpg {

// A domain D is described symbolically as a left-to-right list of blocks.
// Every subset of the reals used by the game is a finite concatenation of
// these five order types.
enum class BlockType { Finite, OmegaUp, OmegaDown, OmegaBi, Dense };

struct BlockKind {
  BlockType type = BlockType::Finite;
  std::int64_t size = 0;    // Finite only
  bool closed_min = false;  // Dense only
  bool closed_max = false;  // Dense only

  static BlockKind finite(std::int64_t k);
  static BlockKind omega_up() { return {BlockType::OmegaUp}; }
  static BlockKind omega_down() { return {BlockType::OmegaDown}; }
  static BlockKind omega_bi() { return {BlockType::OmegaBi}; }
  static BlockKind dense(bool closed_min, bool closed_max) {
    return {BlockType::Dense, 0, closed_min, closed_max};
  }

  bool has_min() const;
  bool has_max() const;

  friend bool operator==(const BlockKind&, const BlockKind&) = default;
};

class DomainDescriptor;

// Merges adjacent blocks that belong to the same D-block (left block has a
// maximum, right block has a minimum) until no such pair remains.
DomainDescriptor normalize_domain(std::vector<BlockKind> raw);

// Canonical block list. Build it through normalize_domain or parse_domain.
class DomainDescriptor {
 public:
  const std::vector<BlockKind>& blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  const BlockKind& block(std::size_t i) const { return blocks_.at(i); }

  bool is_finite() const {
    return blocks_.size() == 1 && blocks_[0].type == BlockType::Finite;
  }
  // Size of a finite domain; throws InvalidInput for symbolic domains.
  std::int64_t finite_size() const;
  bool has_min() const { return blocks_.front().has_min(); }
  bool has_max() const { return blocks_.back().has_max(); }

  friend bool operator==(const DomainDescriptor&, const DomainDescriptor&) = default;

 private:
  friend DomainDescriptor normalize_domain(std::vector<BlockKind> raw);
  explicit DomainDescriptor(std::vector<BlockKind> blocks) : blocks_(std::move(blocks)) {}

  std::vector<BlockKind> blocks_;
};

DomainDescriptor finite_domain(std::int64_t d);

// Grammar:
//   domain := "finite:" INT | block ("," block)*
//   block  := "f" INT | "w+" | "w-" | "z" | "dense(" ("o"|"c") ("o"|"c") ")"
// `normalized`, when given, is set to whether normalization changed the list.
DomainDescriptor parse_domain(std::string_view text, bool* normalized = nullptr);
std::string render_domain(const DomainDescriptor& domain);

// A point of D: block index plus a coordinate inside the block.
//   Finite     0..k-1 ascending
//   OmegaUp    0,1,2,... ascending from the minimum
//   OmegaDown  0,1,2,... descending from the maximum
//   OmegaBi    any integer
//   Dense      rational in (0,1); 0 and 1 when the block is closed there
struct Address {
  std::size_t block = 0;
  Rational offset;

  friend bool operator==(const Address&, const Address&) = default;
};

std::strong_ordering compare(const DomainDescriptor& domain, const Address& a,
                             const Address& b);
bool is_valid_address(const DomainDescriptor& domain, const Address& a);

// "offset" (block 0) or "block:offset"; offsets may be "p/q".
Address parse_address(std::string_view text);
std::string render_address(const Address& a);
std::vector<Address> parse_address_list(std::string_view text);

// Game state: the occupied set S, the inversion parity of the placement
// sequence so far, and the number of turns left.
class Position {
 public:
  Position(DomainDescriptor domain, std::vector<Address> occupied, Parity parity,
           std::int64_t remaining);

  const DomainDescriptor& domain() const { return domain_; }
  // Sorted ascending in domain order.
  const std::vector<Address>& occupied() const { return occupied_; }
  Parity parity() const { return parity_; }
  std::int64_t remaining() const { return remaining_; }

  bool is_terminal() const { return remaining_ == 0; }
  std::optional<Player> mover() const {
    if (remaining_ == 0) return std::nullopt;
    return mover_for(remaining_);
  }
  bool is_free(const Address& a) const;
  std::int64_t count_greater(const Address& a) const;

  friend bool operator==(const Position&, const Position&) = default;

 private:
  DomainDescriptor domain_;
  std::vector<Address> occupied_;
  Parity parity_;
  std::int64_t remaining_;
};

// Convenience for finite domains {1..d}: `elements` are 1-based labels.
Position finite_position(std::int64_t d, const std::vector<std::int64_t>& elements,
                         std::int64_t remaining, Parity parity = Parity::Even);

struct SBlock {
  std::size_t block_index = 0;
  Address lowest;
  Address highest;
  std::int64_t size = 0;
  bool is_pivot = false;
  bool touches_domain_min = false;
  bool touches_domain_max = false;
};

// Maximal runs of occupied elements with no element of D between them.
std::vector<SBlock> s_blocks(const Position& pos);

struct FreeCount {
  bool infinite = false;
  std::int64_t value = 0;
};

// One D-block (an equivalence class of points with finitely many points of D
// between them). The free singletons inside a dense block are summarised by a
// single entry with `infinitely_many` set.
struct DBlockFeature {
  enum class Origin { Block, DenseMin, DenseInterior, DenseMax };
  Origin origin = Origin::Block;
  std::size_t block_index = 0;
  bool infinitely_many = false;
  bool is_finite = false;
  bool has_smallest_free = false;
  bool has_largest_free = false;
  bool is_central = false;
  bool is_exhausted = false;
  bool is_fnedb = false;
  bool is_leftmost = false;
  bool is_rightmost = false;
};

struct FeatureSet {
  int pivot_count = 0;
  std::int64_t end_block_size = 0;
  std::int64_t beginning_block_size = 0;
  FreeCount free_count;
  bool min_free_exists = false;
  bool max_free_exists = false;
  std::vector<DBlockFeature> dblocks;
  // Some D-block has a smallest (largest) free element.
  bool some_smallest_free = false;
  bool some_largest_free = false;
  // Some D-block has a smallest free element other than min(D\S), and
  // symmetrically for the largest free element and max(D\S).
  bool choosable_m_not_min = false;
  bool choosable_M_not_max = false;
};

FeatureSet features(const Position& pos);

constexpr int kDefaultBound = 3;

// Finite set of free addresses covering every move class: run endpoints,
// offsets up to `bound` from each finite run end, whole runs of length at most
// 2*bound+2, and one midpoint per dense gap. Sorted, no duplicates.
std::vector<Address> canonical_moves(const Position& pos, int bound = kDefaultBound);

// Every free element of a finite domain, ascending.
std::vector<Address> all_free_moves(const Position& pos);

Position apply_move(const Position& pos, const Address& move);

}  // namespace tpg
