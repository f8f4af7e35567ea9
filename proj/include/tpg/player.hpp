#pragma once

#include <string_view>

namespace tpg {

// Black plays the last turn of the game, White the second last.
enum class Player { Black, White };

constexpr Player opponent(Player p) {
  return p == Player::Black ? Player::White : Player::Black;
}

// With `remaining` turns left (remaining >= 1) the mover is Black iff odd.
constexpr Player mover_for(long long remaining) {
  return remaining % 2 != 0 ? Player::Black : Player::White;
}

constexpr std::string_view to_string(Player p) {
  return p == Player::Black ? "black" : "white";
}

}  // namespace tpg
