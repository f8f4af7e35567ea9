#include <map>
#include <set>
#include <vector>

#include "doctest.h"
#include "tpg/children_games.hpp"
#include "tpg/verify.hpp"

using namespace tpg;

namespace {

std::multiset<std::vector<int>> pennies_next(const PenniesState& s) {
  std::multiset<std::vector<int>> out;
  for (const auto& n : pennies_moves(s)) out.insert(n.state.clumps);
  return out;
}

std::set<std::string> pieces_next(const PiecesState& s) {
  std::set<std::string> out;
  for (const auto& n : pieces_moves(s)) out.insert(n.state.str());
  return out;
}

}  // namespace

TEST_CASE("pennies moves") {
  CHECK(pennies_next(PenniesState({2, 3})) ==
        std::multiset<std::vector<int>>{{1, 3}, {2, 2}, {2, 1, 1}, {4}});
  for (const auto& n : pennies_moves(PenniesState({1, 1, 1})))
    CHECK(n.state.clumps == std::vector<int>{1, 1});
  std::set<std::vector<int>> three;
  for (const auto& n : pennies_moves(PenniesState({3}))) three.insert(n.state.clumps);
  CHECK(three == std::set<std::vector<int>>{{2}, {1, 1}});
  CHECK_THROWS_AS(pennies_moves(PenniesState({2})), InvalidInput);
}

TEST_CASE("pennies terminal verdicts and text") {
  CHECK(PenniesState({2}).winner() == Player::White);
  CHECK(PenniesState({1, 1}).winner() == Player::Black);
  CHECK(PenniesState::parse("2|3|1").clumps == std::vector<int>{2, 3, 1});
  CHECK(PenniesState({2, 3, 1}).str() == "2|3|1");
  CHECK_THROWS_AS(PenniesState({0, 3}), InvalidInput);
}

TEST_CASE("pennies split needs a clump of three") {
  CHECK_THROWS_AS(apply_pennies_move(PenniesState({2, 2}), ChildMove::parse("split 0 1")),
                  IllegalMove);
  CHECK(apply_pennies_move(PenniesState({3}), ChildMove::parse("split 0 1")).clumps ==
        std::vector<int>{1, 1});
  try {
    apply_pennies_move(PenniesState({1, 1, 1}), ChildMove::parse("merge 0"));
    FAIL("merge accepted");
  } catch (const IllegalMove& e) {
    CHECK(std::string(e.what()).find("merge") != std::string::npos);
  }
}

TEST_CASE("pieces moves") {
  CHECK(pieces_next(PiecesState::parse("wbw")) == std::set<std::string>{"ww", "bw", "wb"});
  CHECK(pieces_next(PiecesState::parse("ww")) == std::set<std::string>{"b", "w"});
  CHECK(PiecesState::parse("b").is_terminal());
  CHECK(PiecesState::parse("b").winner() == Player::Black);
  CHECK(PiecesState::parse("w").winner() == Player::White);
  CHECK_THROWS_AS(pieces_moves(PiecesState::parse("b")), InvalidInput);
  CHECK_THROWS_AS(PiecesState::parse("wx"), InvalidInput);
  CHECK_THROWS_AS(apply_pieces_move(PiecesState::parse("wbw"), ChildMove::parse("merge-whites 0")),
                  IllegalMove);
}

TEST_CASE("encodings") {
  CHECK(pieces_to_sequence(PiecesState::parse("wbw")).terms() == std::vector<int>{2, 2});
  CHECK(pieces_to_sequence(PiecesState::parse("wwww")).terms() == std::vector<int>{5});
  CHECK(pieces_to_sequence(PiecesState::parse("b")).terms() == std::vector<int>{1, 1});
  CHECK(pennies_to_sequence(PenniesState({2, 3})).terms() == std::vector<int>{2, 3});
  CHECK(pennies_to_sequence(PenniesState({1, 1})).terms() == std::vector<int>{1, 1});
  CHECK(pennies_to_sequence(PenniesState({5})).terms() == std::vector<int>{5});
}

TEST_CASE("move labels round-trip") {
  for (const auto& n : pennies_moves(PenniesState({4, 1, 3})))
    CHECK(ChildMove::parse(n.move.label()) == n.move);
  for (const auto& n : pieces_moves(PiecesState::parse("wwbwb")))
    CHECK(ChildMove::parse(n.move.label()) == n.move);
}

TEST_CASE("children minimax equals delta winner of the encoding") {
  std::map<std::vector<int>, Player> pmemo;
  std::map<std::string, Player> qmemo;
  for (int len = 1; len <= 8; ++len) {
    for (int bits = 0; bits < (1 << len); ++bits) {
      std::vector<Piece> v;
      for (int i = 0; i < len; ++i) v.push_back((bits >> i) & 1 ? Piece::Black : Piece::White);
      PiecesState s(v);
      CHECK(pieces_minimax(s, qmemo) == delta_winner(pieces_to_sequence(s)));
      CHECK(s.mover() == pieces_to_sequence(s).mover());
    }
  }
  for (auto c : std::vector<std::vector<int>>{{2, 3}, {5}, {1, 1, 1, 1, 1}, {4, 2, 3}, {1, 6, 1}}) {
    PenniesState s(c);
    CHECK(pennies_minimax(s, pmemo) == delta_winner(pennies_to_sequence(s)));
  }
}
