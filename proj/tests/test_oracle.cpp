#include <random>
#include <vector>

#include "doctest.h"
#include "tpg/oracle.hpp"

using namespace tpg;

TEST_CASE("finite solver examples") {
  CHECK(solve_finite(finite_position(2, {}, 2)) == Verdict::white_controls());
  CHECK(solve_finite(finite_position(2, {}, 1)) == Verdict::forced(Parity::Even));
  CHECK(solve_finite(finite_position(5, {3}, 2)) == Verdict::controlled_by(Player::White));
  CHECK(solve_finite(finite_position(3, {1, 2, 3}, 0, Parity::Odd)) ==
        Verdict::forced(Parity::Odd));
}

TEST_CASE("bounded solver examples") {
  CHECK(solve_bounded(Position(parse_domain("z"), {}, Parity::Even, 3), 3) ==
        Verdict::white_controls());
  CHECK(solve_bounded(Position(parse_domain("w+"), {}, Parity::Even, 4), 3) ==
        Verdict::forced(Parity::Even));
  for (std::int64_t n = 1; n <= 5; ++n) {
    auto pos = finite_position(7, {4}, n);
    CHECK(solve_bounded(pos, 3) == solve_finite(pos));
  }
}

TEST_CASE("solver caps") {
  CHECK_THROWS_AS(solve_finite(finite_position(15, {}, 3)), LimitExceeded);
  CHECK_THROWS_AS(solve_finite(Position(parse_domain("z"), {}, Parity::Even, 2)), InvalidInput);
  CHECK_THROWS_AS(solve_bounded(Position(parse_domain("z"), {}, Parity::Even, 10), 3),
                  LimitExceeded);
  OracleLimits wide;
  wide.max_domain = 16;
  CHECK_NOTHROW(solve_finite(finite_position(15, {}, 2), wide));
}

TEST_CASE("memoized and plain search agree") {
  OracleLimits plain;
  plain.memoize = false;
  std::mt19937 rng(21);
  FiniteSolver memo;
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 8);
    std::vector<std::int64_t> occ;
    for (int x = 1; x <= d; ++x)
      if (rng() % 3 == 0) occ.push_back(x);
    const auto free = d - static_cast<std::int64_t>(occ.size());
    const auto n = static_cast<std::int64_t>(rng() % static_cast<unsigned>(free + 1));
    auto pos = finite_position(d, occ, n, rng() % 2 ? Parity::Odd : Parity::Even);
    CHECK(memo.solve(pos) == solve_finite(pos, plain));
  }
}

TEST_CASE("reversing the domain keeps the controller") {
  FiniteSolver solver;
  for (int d = 1; d <= 8; ++d) {
    for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
      std::vector<std::int64_t> occ, rev;
      for (int i = 0; i < d; ++i)
        if (mask >> i & 1u) {
          occ.push_back(i + 1);
          rev.push_back(d - i);
        }
      for (std::int64_t n = 1; n <= d - static_cast<std::int64_t>(occ.size()); ++n) {
        const auto a = solver.solve(finite_position(d, occ, n));
        const auto b = solver.solve(finite_position(d, rev, n));
        REQUIRE(a.controller() == b.controller());
      }
    }
  }
}

TEST_CASE("order type keys ignore translation") {
  auto a = Position(parse_domain("z"), {Address{0, Rational(0)}, Address{0, Rational(2)}},
                    Parity::Even, 3);
  auto b = Position(parse_domain("z"), {Address{0, Rational(10)}, Address{0, Rational(12)}},
                    Parity::Even, 3);
  CHECK(order_type_key(a) == order_type_key(b));
  auto c = Position(parse_domain("z"), {Address{0, Rational(0)}, Address{0, Rational(3)}},
                    Parity::Even, 3);
  CHECK(solve_bounded(a, 3) == solve_bounded(b, 3));
  CHECK(solve_bounded(c, 2) == solve_bounded(c, 4));
}
