#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tpg/delta_game.hpp"
#include "tpg/player.hpp"

namespace tpg {

// A move in one of the two children's games. `rule` names the rule:
//   pennies: take-first, take-last, remove, split, merge
//   pieces:  remove-black, merge-whites, remove-left, remove-right
struct ChildMove {
  std::string rule;
  std::size_t index = 0;  // clump / piece index, 0-based
  int left = 0;           // pennies split: size of the left part

  // "split 1 2", "remove-black 3", "take-first"
  std::string label() const;
  static ChildMove parse(std::string_view label);
  friend bool operator==(const ChildMove&, const ChildMove&) = default;
};

// Clumps of pennies along a line. Black moves when the total is even; the
// game ends with two pennies left: one clump means White won, two Black.
struct PenniesState {
  std::vector<int> clumps;

  explicit PenniesState(std::vector<int> clumps);
  int total() const;
  bool is_terminal() const { return total() == 2; }
  Player mover() const { return total() % 2 == 0 ? Player::Black : Player::White; }
  Player winner() const;  // terminal only
  std::string str() const;  // "2|3|1"
  static PenniesState parse(std::string_view text);
  friend bool operator==(const PenniesState&, const PenniesState&) = default;
};

enum class Piece { Black, White };

// Black and white pieces along a line. Black moves when the piece count is
// odd; the colour of the last piece names the winner.
struct PiecesState {
  std::vector<Piece> pieces;

  explicit PiecesState(std::vector<Piece> pieces);
  bool is_terminal() const { return pieces.size() == 1; }
  Player mover() const { return pieces.size() % 2 == 1 ? Player::Black : Player::White; }
  Player winner() const;  // terminal only
  std::string str() const;  // "wbw"
  static PiecesState parse(std::string_view text);
  friend bool operator==(const PiecesState&, const PiecesState&) = default;
};

template <class State>
struct ChildSuccessor {
  ChildMove move;
  State state;
};

std::vector<ChildSuccessor<PenniesState>> pennies_moves(const PenniesState& s);
std::vector<ChildSuccessor<PiecesState>> pieces_moves(const PiecesState& s);

// Applies a move after checking it against the rules; throws IllegalMove
// naming the rule that failed.
PenniesState apply_pennies_move(const PenniesState& s, const ChildMove& m);
PiecesState apply_pieces_move(const PiecesState& s, const ChildMove& m);

BlockSequence pennies_to_sequence(const PenniesState& s);
// Bar after each black piece; the last count gets one extra.
BlockSequence pieces_to_sequence(const PiecesState& s);

}  // namespace tpg
