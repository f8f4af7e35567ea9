#include <vector>

#include "doctest.h"
#include "tpg/oracle.hpp"
#include "tpg/strategy.hpp"

using namespace tpg;

namespace {

Address at(std::size_t block, std::int64_t offset) { return Address{block, Rational(offset)}; }

Position on(const char* domain, std::vector<Address> occ, std::int64_t n,
            Parity parity = Parity::Even) {
  return Position(parse_domain(domain), std::move(occ), parity, n);
}

std::vector<Objective> objectives_for(const Verdict& v, Player p) {
  std::vector<Objective> out;
  for (auto o : {Objective::control_parity(), Objective::force(Parity::Even),
                 Objective::force(Parity::Odd)})
    if (o.granted_by(v, p)) out.push_back(o);
  return out;
}

}  // namespace

TEST_CASE("winning move with one pivot") {
  auto pos = finite_position(6, {3}, 4);
  REQUIRE(Objective::control_parity().granted_by(classify(pos).verdict, Player::White));
  auto m = winning_move(pos, Objective::control_parity());
  CHECK(solve_finite(apply_move(pos, m)) == Verdict::white_controls());
}

TEST_CASE("pivot-creating moves on z keep Black in control") {
  for (std::int64_t n : {3, 5, 7}) {
    auto pos = on("z", {at(0, 0)}, n);
    for (std::int64_t off : {-2, 2})
      CHECK(classify(apply_move(pos, at(0, off))).verdict == Verdict::black_controls());
    auto m = winning_move(pos, Objective::control_parity());
    CHECK(classify(apply_move(pos, m)).verdict == Verdict::black_controls());
  }
}

TEST_CASE("winning move from a lost position throws") {
  auto pos = finite_position(5, {}, 5);
  REQUIRE(classify(pos).verdict == Verdict::white_controls());
  CHECK_THROWS_AS(winning_move(pos, Objective::control_parity()), LosingPosition);
  CHECK_THROWS_AS(winning_move(finite_position(4, {}, 0), Objective::force(Parity::Even)),
                  InvalidInput);
}

TEST_CASE("winning move successors never degrade") {
  for (int d = 3; d <= 8; ++d) {
    for (std::uint32_t mask = 0; mask < (1u << d); mask += 3) {
      std::vector<std::int64_t> occ;
      for (int i = 0; i < d; ++i)
        if (mask >> i & 1u) occ.push_back(i + 1);
      for (std::int64_t n = 1; n <= d - static_cast<std::int64_t>(occ.size()); ++n) {
        auto pos = finite_position(d, occ, n);
        const Player me = *pos.mover();
        for (auto o : objectives_for(classify(pos).verdict, me)) {
          auto next = classify(apply_move(pos, winning_move(pos, o))).verdict;
          // Control nobody can keep through one move is spent on even.
          CHECK((o.granted_by(next, me) ||
                 (o.control && Objective::force(Parity::Even).granted_by(next, me))));
        }
      }
    }
  }
}

TEST_CASE("control on the last move picks even") {
  auto pos = finite_position(3, {}, 2);
  REQUIRE(classify(pos).verdict == Verdict::white_controls());
  auto next = apply_move(pos, winning_move(pos, Objective::control_parity()));
  CHECK(classify(next).verdict.forcible(Player::White).contains(Parity::Even));
}

TEST_CASE("named maneuvers") {
  // White removes a pivot while choosing the parity.
  {
    auto pos = finite_position(8, {4}, 4);
    auto m = winning_move(pos, Objective::control_parity());
    CHECK(features(apply_move(pos, m)).pivot_count == 0);
  }
  // Black creates a second pivot on a large finite domain.
  {
    auto pos = finite_position(11, {3}, 5);
    REQUIRE(classify(pos).verdict == Verdict::black_controls());
    auto m = winning_move(pos, Objective::control_parity());
    CHECK(features(apply_move(pos, m)).pivot_count >= 1);
  }
  // Forcing even on w+,w+: the successor still forces even.
  {
    auto pos = on("w+,w+", {}, 5);
    auto m = winning_move(pos, Objective::force(Parity::Even));
    CHECK(classify(apply_move(pos, m)).verdict.forcible(Player::Black).contains(Parity::Even));
  }
}

TEST_CASE("play_out examples") {
  auto pos = finite_position(4, {}, 4);
  const auto v = solve_finite(pos);
  for (Parity bt : {Parity::Even, Parity::Odd}) {
    Agent black{Policy::MinimaxOracle, bt};
    Agent white{Policy::MinimaxOracle, flip(bt)};
    auto r = play_out(pos, black, white, 1);
    if (v.forcible(Player::Black).contains(bt))
      CHECK(r.final_parity == bt);
    else
      CHECK(r.final_parity == flip(bt));
    CHECK(r.moves.size() == 4);
  }

  auto done = finite_position(4, {1, 2}, 0, Parity::Odd);
  CHECK(play_out(done, Agent{}, Agent{}, 5).final_parity == Parity::Odd);
}

TEST_CASE("classifier keeps even on w+,w+ against random play") {
  auto pos = on("w+,w+", {}, 5);
  Agent black{Policy::ClassifierLookahead, Parity::Even};
  Agent white{Policy::UniformRandom, Parity::Odd};
  AgentContext ctx(0);
  int kept = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed)
    kept += play_out(pos, black, white, seed, ctx).final_parity == Parity::Even;
  CHECK(kept == 1000);
}

TEST_CASE("playouts are reproducible from the seed") {
  auto pos = on("f2,z", {}, 6);
  Agent a{Policy::UniformRandom, Parity::Even};
  Agent b{Policy::GreedyParity, Parity::Odd};
  CHECK(play_out(pos, a, b, 42).moves == play_out(pos, a, b, 42).moves);
}

TEST_CASE("illegal moves are a protocol violation naming the source") {
  auto pos = finite_position(5, {3}, 3);
  MoveSource cheat{"cheat", [](const Position&) { return Address{0, Rational(2)}; }};
  MoveSource fine{"fine", [](const Position& p) { return all_free_moves(p).front(); }};
  try {
    play_out(pos, cheat, fine);
    FAIL("no violation");
  } catch (const ProtocolViolation& e) {
    CHECK(std::string(e.what()).find("cheat") != std::string::npos);
  }
  CHECK(play_out(pos, fine, fine).moves.size() == 3);
}

TEST_CASE("policies and records") {
  CHECK(parse_policy("greedy") == Policy::GreedyParity);
  CHECK(to_string(Policy::MinimaxOracle) == std::string_view("oracle"));
  auto pos = finite_position(4, {}, 2);
  Agent a{};
  auto r = play_out(pos, a, a, 3);
  auto line = playout_record(pos, 3, a, a, "control", r);
  CHECK(line.find("\"seed\"") != std::string::npos);
  CHECK(line.find('\n') == std::string::npos);
}
