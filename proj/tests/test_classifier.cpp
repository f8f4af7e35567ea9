#include <vector>

#include "doctest.h"
#include "tpg/classifier.hpp"
#include "tpg/oracle.hpp"

using namespace tpg;

namespace {

Position empty_on(const char* domain, std::int64_t n) {
  return Position(parse_domain(domain), {}, Parity::Even, n);
}

Verdict mover_controls(std::int64_t n) { return Verdict::controlled_by(mover_for(n)); }

}  // namespace

TEST_CASE("verdict_fold examples") {
  std::vector<Verdict> a{Verdict::black_controls(), Verdict::forced(Parity::Even)};
  CHECK(verdict_fold(a, Player::White) == Verdict::forced(Parity::Even));
  std::vector<Verdict> b{Verdict::forced(Parity::Even), Verdict::forced(Parity::Odd)};
  CHECK(verdict_fold(b, Player::White) == Verdict::white_controls());
  std::vector<Verdict> c{Verdict::black_controls()};
  CHECK(verdict_fold(c, Player::White) == Verdict::black_controls());
  CHECK_THROWS_AS(verdict_fold(std::vector<Verdict>{}, Player::Black), InvalidInput);
}

TEST_CASE("verdict_fold is monotone in the children") {
  const std::vector<Verdict> all{Verdict::black_controls(), Verdict::white_controls(),
                                 Verdict::forced(Parity::Even), Verdict::forced(Parity::Odd)};
  for (Player mover : {Player::Black, Player::White}) {
    for (const auto& x : all)
      for (const auto& y : all)
        for (const auto& z : all) {
          std::vector<Verdict> two{x, y}, three{x, y, z};
          const auto before = verdict_fold(two, mover).forcible(mover);
          const auto after = verdict_fold(three, mover).forcible(mover);
          CHECK((before | after) == after);
        }
  }
}

TEST_CASE("verdict text and forcible sets") {
  for (const char* s : {"black-controls", "white-controls", "forced-even", "forced-odd"})
    CHECK(Verdict::parse(s).str() == s);
  CHECK(Verdict::forced(Parity::Odd).forcible(Player::White) == ParitySet::only(Parity::Odd));
  CHECK(Verdict::black_controls().forcible(Player::White).empty());
  CHECK(render_phrase(Verdict::black_controls(), 5) == "first-player");
  CHECK(render_phrase(Verdict::white_controls(), 4) == "first-player");
  CHECK(render_phrase(Verdict::black_controls(), 4) == "second-player");
  CHECK(render_phrase(Verdict::forced(Parity::Even), 4) == "forced-even");
}

TEST_CASE("golden examples for n = 3..6") {
  for (std::int64_t n = 3; n <= 6; ++n) {
    CAPTURE(n);
    for (std::int64_t d = n; d <= 9; ++d)
      CHECK(classify(Position(finite_domain(d), {}, Parity::Even, n)).verdict ==
            Verdict::white_controls());
    auto dense = Position(parse_domain("dense(cc)"), {Address{0, Rational(1, 2)}}, Parity::Even, n);
    CHECK(classify(dense).verdict == Verdict::black_controls());
    CHECK(classify(empty_on("w+,w+", n)).verdict == Verdict::forced(Parity::Even));
    CHECK(classify(empty_on("w-,w-", n)).verdict == Verdict::forced(parity_of(n / 2)));
    CHECK(classify(empty_on("w+,w-", n)).verdict == Verdict::white_controls());
    CHECK(classify(empty_on("z", n)).verdict == Verdict::controlled_by(opponent(mover_for(n))));
    CHECK(classify(empty_on("f1,z", n)).verdict == mover_controls(n));
    CHECK(classify(empty_on("f2,z", n)).verdict == Verdict::black_controls());
  }
}

TEST_CASE("golden phrases") {
  for (std::int64_t n = 3; n <= 6; ++n) {
    CHECK(render_phrase(classify(empty_on("z", n)).verdict, n) == "second-player");
    CHECK(render_phrase(classify(empty_on("f1,z", n)).verdict, n) == "first-player");
  }
}

TEST_CASE("finite case labels") {
  CHECK(classify(finite_position(6, {}, 6)).label == CaseLabel::FIN_EXACT);
  CHECK(classify(finite_position(6, {3}, 4)).label == CaseLabel::FIN_DELTA);
  CHECK(classify(finite_position(8, {}, 4)).label == CaseLabel::FIN_NOPIV);
  auto one = classify(finite_position(8, {3}, 4));
  CHECK(one.label == CaseLabel::FIN_ONEPIV);
  CHECK(one.verdict == mover_controls(4));
  auto many = classify(finite_position(9, {3, 6}, 4));
  CHECK(many.label == CaseLabel::FIN_MANYPIV);
  CHECK(many.verdict == Verdict::black_controls());
  CHECK(classify(finite_position(6, {3}, 2)).label == CaseLabel::BASE_ENUM);
  CHECK(classify(finite_position(6, {3}, 0, Parity::Odd)).verdict == Verdict::forced(Parity::Odd));
}

TEST_CASE("Black's second-last turn") {
  auto nopiv = classify(finite_position(8, {1, 2}, 3));
  CHECK(nopiv.verdict == Verdict::white_controls());
  auto piv = classify(finite_position(8, {4}, 3));
  CHECK(piv.verdict == Verdict::black_controls());
}

TEST_CASE("end block shifts the forced parity") {
  // One free element left of a z block, its minimum occupied, Black to move.
  Position pos(parse_domain("w+,f1"), {Address{1, Rational(0)}}, Parity::Odd, 5);
  auto c = classify(pos);
  CHECK(c.verdict == Verdict::forced(Parity::Even));
  CHECK(c.verdict == solve_bounded(pos, 3));
}

TEST_CASE("classify agrees with the finite solver for d <= 8") {
  FiniteSolver solver;
  for (int d = 1; d <= 8; ++d) {
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      std::vector<std::int64_t> occ;
      for (int i = 0; i < d; ++i)
        if (mask >> i & 1u) occ.push_back(i + 1);
      for (std::int64_t n = 0; n <= d - static_cast<std::int64_t>(occ.size()); ++n) {
        for (Parity p : {Parity::Even, Parity::Odd}) {
          auto pos = finite_position(d, occ, n, p);
          REQUIRE(classify(pos).verdict == solver.solve(pos));
        }
      }
    }
  }
}

TEST_CASE("white turn on a symbolic domain folds over successors") {
  auto c = classify(empty_on("w+,w-", 4));
  CHECK(c.label == CaseLabel::WHITE_FOLD);
  CHECK(to_string(c.label) == "WHITE_FOLD");
}
