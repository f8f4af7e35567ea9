#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "tpg/domain.hpp"
#include "tpg/order.hpp"
#include "tpg/player.hpp"

namespace tpg {

// Subset of {even, odd}.
class ParitySet {
 public:
  constexpr ParitySet() = default;
  static constexpr ParitySet none() { return ParitySet(0); }
  static constexpr ParitySet all() { return ParitySet(3); }
  static constexpr ParitySet only(Parity p) { return ParitySet(p == Parity::Even ? 1 : 2); }

  constexpr bool contains(Parity p) const { return (bits_ & only(p).bits_) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool full() const { return bits_ == 3; }
  constexpr ParitySet operator|(ParitySet o) const { return ParitySet(bits_ | o.bits_); }
  constexpr ParitySet& operator|=(ParitySet o) { return *this = *this | o; }
  constexpr std::uint8_t bits() const { return bits_; }
  static constexpr ParitySet from_bits(std::uint8_t b) { return ParitySet(b & 3); }

  friend constexpr bool operator==(ParitySet, ParitySet) = default;

 private:
  constexpr explicit ParitySet(std::uint8_t bits) : bits_(bits) {}
  std::uint8_t bits_ = 0;
};

// Who can dictate the final parity. Internally the set of parities Black can
// force; White's set follows by determinacy of the two-outcome game.
class Verdict {
 public:
  enum class Kind { BlackControls, WhiteControls, Forced };

  static Verdict black_controls() { return Verdict(ParitySet::all()); }
  static Verdict white_controls() { return Verdict(ParitySet::none()); }
  static Verdict forced(Parity p) { return Verdict(ParitySet::only(p)); }
  static Verdict controlled_by(Player p) {
    return p == Player::Black ? black_controls() : white_controls();
  }
  // The verdict under which `player` can force exactly `set`.
  static Verdict from_forcible(Player player, ParitySet set);

  Kind kind() const;
  // Forced verdicts only.
  Parity forced_parity() const;
  std::optional<Player> controller() const;
  ParitySet forcible(Player player) const;

  // "black-controls", "white-controls", "forced-even", "forced-odd"
  std::string str() const;
  static Verdict parse(std::string_view text);

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  explicit Verdict(ParitySet black) : black_(black) {}
  ParitySet black_;
};

enum class CaseLabel {
  FIN_EXACT,
  FIN_DELTA,
  FIN_NOPIV,
  FIN_ONEPIV,
  FIN_MANYPIV,
  Z_ONEPIV,
  Z_MANYPIV,
  Z_BI_NOPIV,
  Z_PLUS_NOPIV,
  Z_MINUS_NOPIV,
  R_PIVOT,
  R1a,
  R1b,
  R1c,
  R1d,
  R1e,
  R1f,
  R2,
  R3,
  R4,
  R5,
  R6,
  R7a,
  R7b,
  R7c,
  R8a,
  R8b,
  R8c,
  BASE_ENUM,
  WHITE_FOLD,
};

std::string_view to_string(CaseLabel label);

struct Classification {
  Verdict verdict;
  CaseLabel label;
};

struct ClassifyOptions {
  // Canonical-move bound used for White-turn lookahead and short endgames.
  int bound = kDefaultBound;
};

Classification classify(const Position& pos, const ClassifyOptions& options = {});

// Combines the verdicts of the positions reachable in one move: the mover can
// force a parity iff some child lets it.
Verdict verdict_fold(std::span<const Verdict> children, Player mover);

// Verdict string, or "first-player" / "second-player" when one side controls
// and turns remain.
std::string render_phrase(const Verdict& verdict, std::int64_t remaining);

}  // namespace tpg
