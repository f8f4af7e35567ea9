#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tpg/domain.hpp"
#include "tpg/player.hpp"

namespace tpg {

// Ordered sequence (n_1, ..., n_k) of positive integers with sum >= 2.
// It is Black's turn iff the sum is even; the game ends at sum 2.
class BlockSequence {
 public:
  explicit BlockSequence(std::vector<int> terms);

  const std::vector<int>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  int sum() const { return sum_; }
  bool is_terminal() const { return sum_ == 2; }
  Player mover() const { return sum_ % 2 == 0 ? Player::Black : Player::White; }

  // "3,5,2"
  std::string str() const;
  static BlockSequence parse(std::string_view text);

  friend bool operator==(const BlockSequence& a, const BlockSequence& b) {
    return a.terms_ == b.terms_;
  }
  friend auto operator<=>(const BlockSequence& a, const BlockSequence& b) {
    return a.terms_ <=> b.terms_;
  }

 private:
  std::vector<int> terms_;
  int sum_ = 0;
};

struct DeltaMove {
  enum class Kind {
    DecHead,     // n_1 -> n_1 - 1, needs n_1 >= 2
    DecTail,     // n_k -> n_k - 1, needs n_k >= 2
    RemoveUnit,  // drop n_i == 1
    Split,       // n_i >= 3 -> (left, n_i - 1 - left), both >= 1
    Merge,       // (n_i, n_{i+1}) -> n_i + n_{i+1} - 1, needs sum >= 3
  };
  Kind kind = Kind::DecHead;
  std::size_t index = 0;  // 0-based term index
  int left = 0;           // Split only

  std::string str() const;
  friend bool operator==(const DeltaMove&, const DeltaMove&) = default;
};

// Green-minus-red count of odd terms; the pen starts green and switches
// colour at every even term.
int delta(const BlockSequence& seq);

// Throws IllegalMove when the rule does not apply.
BlockSequence apply_delta_move(const BlockSequence& seq, const DeltaMove& move);

// Every legal (move, successor) pair. Throws InvalidInput on terminal input.
std::vector<std::pair<DeltaMove, BlockSequence>> legal_delta_moves(const BlockSequence& seq);

// White's turn: White wins iff |delta| == 1. Black's turn: Black wins iff
// |delta| != 0. Terminal (2) is a White win, (1,1) a Black win.
Player delta_winner(const BlockSequence& seq);

// First legal move (in legal_delta_moves order) that keeps the mover winning.
// Throws LosingPosition when the mover cannot win.
std::pair<DeltaMove, BlockSequence> delta_best_move(const BlockSequence& seq);

// Free-element counts between consecutive pivots of a finite position with
// |D| = |S| + remaining + 1.
BlockSequence encode_blocks(const Position& pos);

}  // namespace tpg
