#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tpg/classifier.hpp"
#include "tpg/domain.hpp"
#include "tpg/oracle.hpp"

namespace tpg {

// What a player is trying to achieve: dictate either parity, or reach one.
struct Objective {
  bool control = false;
  Parity parity = Parity::Even;

  static Objective control_parity() { return {true, Parity::Even}; }
  static Objective force(Parity p) { return {false, p}; }
  bool granted_by(const Verdict& v, Player player) const;
  std::string str() const;
};

// Lowest canonical move whose successor still grants the mover `objective`
// per classify. Control that no single move can keep (the mover's last say in
// the parity) is spent on reaching even. Throws LosingPosition when the
// objective is out of reach.
Address winning_move(const Position& pos, const Objective& objective,
                     const ClassifyOptions& options = {});

enum class Policy { ClassifierLookahead, MinimaxOracle, UniformRandom, GreedyParity };

std::string_view to_string(Policy policy);
Policy parse_policy(std::string_view text);

struct Agent {
  Policy policy = Policy::ClassifierLookahead;
  Parity target = Parity::Even;  // final parity this agent plays for
  int bound = kDefaultBound;

  std::string name() const;
};

// Solvers and RNG shared by the agents of one or more playouts.
class AgentContext {
 public:
  explicit AgentContext(std::uint64_t seed = 0, int bound = kDefaultBound)
      : rng_(seed), bounded_(bound) {}

  void reseed(std::uint64_t seed) { rng_.seed(seed); }
  std::mt19937_64& rng() { return rng_; }
  Verdict oracle(const Position& pos);

 private:
  std::mt19937_64 rng_;
  FiniteSolver finite_;
  BoundedSolver bounded_;
};

// The agent's move for the position's mover. MinimaxOracle searches every
// free element on finite domains; the other policies pick among canonical
// moves, lowest address first.
Address choose_move(const Agent& agent, const Position& pos, AgentContext& ctx);

struct Playout {
  Parity final_parity = Parity::Even;
  std::vector<Address> moves;
};

// Plays until no turns remain; Black moves when remaining is odd.
Playout play_out(const Position& start, const Agent& black, const Agent& white,
                 std::uint64_t seed);
Playout play_out(const Position& start, const Agent& black, const Agent& white,
                 std::uint64_t seed, AgentContext& ctx);

// Any move source, e.g. a scripted or remote player.
struct MoveSource {
  std::string name;
  std::function<Address(const Position&)> pick;
};

// Throws ProtocolViolation naming the source when it returns a move that is
// not a free element of the position.
Playout play_out(const Position& start, const MoveSource& black, const MoveSource& white);

// One line of the harness report (JSON, no trailing newline).
std::string playout_record(const Position& start, std::uint64_t seed, const Agent& black,
                           const Agent& white, const std::string& objective,
                           const Playout& result);

}  // namespace tpg
