#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "tpg/classifier.hpp"
#include "tpg/domain.hpp"

namespace tpg {

struct OracleLimits {
  int max_domain = 14;  // finite solver: largest |D|
  int max_depth = 9;    // bounded solver: largest remaining
  bool memoize = true;
};

// Exhaustive minimax over a finite domain. Nodes are keyed on
// (occupied set, parity, remaining): placement order only matters through
// the parity. The memo survives across solve() calls on the same domain size.
class FiniteSolver {
 public:
  explicit FiniteSolver(OracleLimits limits = {}) : limits_(limits) {}

  Verdict solve(const Position& pos);
  std::uint64_t nodes_expanded() const { return nodes_; }

 private:
  ParitySet black_set(std::uint32_t mask, Parity parity, int remaining);

  OracleLimits limits_;
  int size_ = -1;
  std::vector<std::uint8_t> memo_;  // 0 = unknown, else black set bits + 1
  std::uint64_t nodes_ = 0;
};

Verdict solve_finite(const Position& pos, OracleLimits limits = {});

// Minimax restricted to canonical_moves(., bound). Exact on finite domains
// whose free runs are all at most 2*bound+2 long; evidence otherwise.
// Nodes are keyed on the order type of the occupied set, so translated or
// rescaled copies share one entry.
class BoundedSolver {
 public:
  explicit BoundedSolver(int bound, OracleLimits limits = {}) : bound_(bound), limits_(limits) {}

  Verdict solve(const Position& pos);
  int bound() const { return bound_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  ParitySet black_set(const Position& pos);

  int bound_;
  OracleLimits limits_;
  std::string domain_;
  std::unordered_map<std::string, std::uint8_t> memo_;
};

Verdict solve_bounded(const Position& pos, int bound, OracleLimits limits = {});

// Structural key used by BoundedSolver; exposed for tests.
std::string order_type_key(const Position& pos);

}  // namespace tpg
