#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "tpg/delta_game.hpp"
#include "tpg/verify.hpp"

using namespace tpg;

namespace {

BlockSequence seq(std::vector<int> t) { return BlockSequence(std::move(t)); }

std::set<std::vector<int>> successors(const BlockSequence& s) {
  std::set<std::vector<int>> out;
  for (const auto& [m, next] : legal_delta_moves(s)) out.insert(next.terms());
  return out;
}

void compositions(int n, std::vector<int>& cur, std::vector<BlockSequence>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int first = 1; first <= n; ++first) {
    cur.push_back(first);
    compositions(n - first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("delta values") {
  CHECK(delta(seq({3, 5, 2, 1, 7, 1, 4, 2, 1})) == -2);
  CHECK(delta(seq({2})) == 0);
  CHECK(delta(seq({1, 1})) == 2);
  CHECK(delta(seq({1, 1, 1, 1})) == 4);
}

TEST_CASE("sequences reject bad terms") {
  CHECK_THROWS_AS(seq({0, 3}), InvalidInput);
  CHECK_THROWS_AS(seq({1}), InvalidInput);
  CHECK_THROWS_AS(BlockSequence::parse("3,,2"), InvalidInput);
  CHECK(BlockSequence::parse("3,5,2").str() == "3,5,2");
}

TEST_CASE("legal delta moves") {
  CHECK(successors(seq({2, 3})) ==
        std::set<std::vector<int>>{{1, 3}, {2, 2}, {2, 1, 1}, {4}});
  auto ones = legal_delta_moves(seq({1, 1, 1}));
  CHECK(ones.size() == 3);
  for (const auto& [m, next] : ones) {
    CHECK(m.kind == DeltaMove::Kind::RemoveUnit);
    CHECK(next.terms() == std::vector<int>{1, 1});
  }
  CHECK(successors(seq({3})) == std::set<std::vector<int>>{{2}, {1, 1}});
  CHECK(legal_delta_moves(seq({3})).size() == 3);
  CHECK_THROWS_AS(legal_delta_moves(seq({2})), InvalidInput);
  CHECK_THROWS_AS(apply_delta_move(seq({1, 1, 1}), DeltaMove{DeltaMove::Kind::Merge, 0, 0}),
                  IllegalMove);
}

TEST_CASE("delta winners") {
  for (int d = 2; d <= 15; ++d) CHECK(delta_winner(seq({d})) == Player::White);
  CHECK(delta_winner(seq({1, 1})) == Player::Black);
}

TEST_CASE("delta best move") {
  CHECK_THROWS_AS(delta_best_move(seq({4})), LosingPosition);
  auto [m, next] = delta_best_move(seq({3}));
  CHECK(next.terms() == std::vector<int>{2});
  CHECK((m.kind == DeltaMove::Kind::DecHead || m.kind == DeltaMove::Kind::DecTail));
  auto [bm, bnext] = delta_best_move(seq({1, 1, 1, 1, 2}));
  CHECK(std::abs(delta(bnext)) > std::abs(delta(seq({1, 1, 1, 1, 2}))));
  CHECK(delta_winner(bnext) == Player::Black);
}

TEST_CASE("delta invariants over every sequence with sum at most 13") {
  std::map<std::vector<int>, Player> memo;
  int checked = 0;
  for (int n = 2; n <= 13; ++n) {
    std::vector<BlockSequence> all;
    std::vector<int> cur;
    compositions(n, cur, all);
    for (const auto& s : all) {
      ++checked;
      const int dv = delta(s);
      CHECK(std::abs(dv) <= static_cast<int>(s.size()));
      CHECK(((dv - s.sum()) % 2 + 2) % 2 == 0);
      CHECK(delta_winner(s) == sequence_minimax(s, memo));
      if (s.is_terminal()) continue;
      for (const auto& [m, next] : legal_delta_moves(s)) {
        CHECK(next.sum() == s.sum() - 1);
        CHECK(std::abs(std::abs(delta(next)) - std::abs(dv)) == 1);
      }
      if (delta_winner(s) == s.mover())
        CHECK(delta_winner(delta_best_move(s).second) == s.mover());
      else
        CHECK_THROWS_AS(delta_best_move(s), LosingPosition);
    }
  }
  CHECK(checked == (1 << 13) - 2);
}

TEST_CASE("tricky shapes admit a winning successor") {
  // Black: split an odd n_i > 3, trim an even one, break a 3 at the edge, fix trailing 2s.
  for (auto t : std::vector<std::vector<int>>{{5, 2}, {4, 1, 2}, {3, 1, 1, 2}, {1, 3, 2}, {2, 2, 1, 1}}) {
    auto s = seq(t);
    if (delta_winner(s) != s.mover()) continue;
    auto next = delta_best_move(s).second;
    CHECK(delta_winner(next) == s.mover());
  }
}

TEST_CASE("encode_blocks examples") {
  CHECK(encode_blocks(finite_position(6, {3}, 4)).terms() == std::vector<int>{2, 3});
  CHECK(encode_blocks(finite_position(2, {}, 1)).terms() == std::vector<int>{2});
  CHECK(encode_blocks(finite_position(7, {2, 5}, 4)).terms() == std::vector<int>{1, 2, 2});
  CHECK_THROWS_AS(encode_blocks(finite_position(7, {2, 5}, 3)), InvalidInput);
}
