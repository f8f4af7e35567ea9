#pragma once

// Exhaustive and randomized cross-checks of the engine against brute force.
// Shared by the `verify` command and the acceptance runner.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "tpg/children_games.hpp"
#include "tpg/delta_game.hpp"
#include "tpg/domain.hpp"

namespace tpg {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::vector<std::string> counterexamples;  // first few only
  std::string detail;

  void fail(std::string what);
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
};

struct VerifyOptions {
  int max_d = 11;             // finite sweep
  int move_parity_max_d = 10;
  int selfplay_max_d = 10;
  int bisim_max_d = 9;
  int max_sum = 13;           // delta sweep
  int max_pennies = 11;
  int max_pieces = 10;
  int bound = kDefaultBound;
  int symbolic_positions = 10000;  // self-play corpus
  int bound_positions = 1500;      // bound insensitivity corpus
  int structured_placed = 3;       // occupied points in the grid corpus
  int max_remaining = 7;
  std::uint64_t seed = 20261015;
};

SuiteReport verify_finite_sweep(const VerifyOptions& options);
SuiteReport verify_move_parity(const VerifyOptions& options);
SuiteReport verify_delta_sweep(const VerifyOptions& options);
SuiteReport verify_bisim(const VerifyOptions& options);
SuiteReport verify_children(const VerifyOptions& options);
SuiteReport verify_examples(const VerifyOptions& options);
SuiteReport verify_selfplay(const VerifyOptions& options);
SuiteReport verify_bound(const VerifyOptions& options);

// finite-sweep, move-parity, delta-sweep, bisim, children, examples, selfplay, bound
const std::vector<std::string>& suite_names();
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

// Plain-text table, one line per check.
std::string render_report(const SuiteReport& report);

// Random symbolic positions: at most three blocks, at least one infinite,
// 1..max_remaining turns left. Deterministic in the seed.
std::vector<Position> symbolic_corpus(int count, std::uint64_t seed, int max_remaining);

// Every two- and three-block domain over w+, w-, z, f1, f2 and open dense
// blocks, with up to `max_placed` points drawn from the bound-1 move slots.
std::vector<Position> structured_corpus(int max_placed);

// Game-tree values computed straight from the move rules, independent of delta.
Player sequence_minimax(const BlockSequence& seq, std::map<std::vector<int>, Player>& memo);
Player pennies_minimax(const PenniesState& s, std::map<std::vector<int>, Player>& memo);
Player pieces_minimax(const PiecesState& s, std::map<std::string, Player>& memo);

}  // namespace tpg
