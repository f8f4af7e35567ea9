#include "tpg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tpg/errors.hpp"

namespace tpg {

namespace {

ParitySet to_black(Player mover, ParitySet mover_set) {
  return Verdict::from_forcible(mover, mover_set).forcible(Player::Black);
}

// Determinacy of the two-outcome game: the mover forces something, or the
// opponent forces both parities.
void check_determinacy(Player mover, ParitySet mover_set) {
  Verdict v = Verdict::from_forcible(mover, mover_set);
  if (mover_set.empty() && !v.forcible(opponent(mover)).full())
    throw std::logic_error("oracle: determinacy violated");
}

}  // namespace

Verdict FiniteSolver::solve(const Position& pos) {
  const std::int64_t d = pos.domain().finite_size();
  if (d > limits_.max_domain)
    throw LimitExceeded("finite oracle: |D| = " + std::to_string(d) + " exceeds cap " +
                        std::to_string(limits_.max_domain));
  if (d != size_) {
    size_ = static_cast<int>(d);
    memo_.assign(limits_.memoize ? (std::size_t{1} << d) * 2 * (d + 1) : 0, 0);
  }
  std::uint32_t mask = 0;
  for (const auto& a : pos.occupied()) mask |= 1u << a.offset.num();
  return Verdict::from_forcible(
      Player::Black, black_set(mask, pos.parity(), static_cast<int>(pos.remaining())));
}

ParitySet FiniteSolver::black_set(std::uint32_t mask, Parity parity, int remaining) {
  if (remaining == 0) return ParitySet::only(parity);
  std::size_t slot = 0;
  if (limits_.memoize) {
    slot = ((static_cast<std::size_t>(mask) * 2 + static_cast<std::size_t>(parity)) *
            static_cast<std::size_t>(size_ + 1)) +
           static_cast<std::size_t>(remaining);
    if (memo_[slot] != 0) return ParitySet::from_bits(static_cast<std::uint8_t>(memo_[slot] - 1));
  }
  ++nodes_;
  const Player mover = mover_for(remaining);
  ParitySet mover_set;
  for (int x = 0; x < size_ && !mover_set.full(); ++x) {
    if (mask & (1u << x)) continue;
    const auto greater = std::popcount(mask >> (x + 1));
    ParitySet child = black_set(mask | (1u << x), parity + append_parity_delta(greater),
                                remaining - 1);
    mover_set |= Verdict::from_forcible(Player::Black, child).forcible(mover);
  }
  check_determinacy(mover, mover_set);
  ParitySet black = to_black(mover, mover_set);
  if (limits_.memoize) memo_[slot] = static_cast<std::uint8_t>(black.bits() + 1);
  return black;
}

Verdict solve_finite(const Position& pos, OracleLimits limits) {
  return FiniteSolver(limits).solve(pos);
}

std::string order_type_key(const Position& pos) {
  const auto& domain = pos.domain();
  std::string key;
  auto put = [&](std::int64_t v) {
    key.append(reinterpret_cast<const char*>(&v), sizeof v);
  };
  for (std::size_t b = 0; b < domain.block_count(); ++b) {
    const BlockKind& kind = domain.block(b);
    std::vector<Rational> occ;
    for (const auto& a : pos.occupied())
      if (a.block == b) occ.push_back(a.offset);
    std::sort(occ.begin(), occ.end());
    put(-1 - static_cast<std::int64_t>(b));
    if (kind.type == BlockType::Dense) {
      // Only the pattern matters: endpoint occupancy and interior count.
      bool lo = !occ.empty() && occ.front() == Rational(0);
      bool hi = !occ.empty() && occ.back() == Rational(1);
      put(lo);
      put(hi);
      put(static_cast<std::int64_t>(occ.size()) - lo - hi);
      continue;
    }
    const std::int64_t shift =
        (kind.type == BlockType::OmegaBi && !occ.empty()) ? occ.front().num() : 0;
    for (const auto& x : occ) put(x.num() - shift);
  }
  put(static_cast<std::int64_t>(pos.parity()));
  put(pos.remaining());
  return key;
}

Verdict BoundedSolver::solve(const Position& pos) {
  if (pos.remaining() > limits_.max_depth)
    throw LimitExceeded("bounded oracle: remaining " + std::to_string(pos.remaining()) +
                        " exceeds depth cap " + std::to_string(limits_.max_depth));
  auto rendered = render_domain(pos.domain());
  if (rendered != domain_) {
    domain_ = std::move(rendered);
    memo_.clear();
  }
  return Verdict::from_forcible(Player::Black, black_set(pos));
}

ParitySet BoundedSolver::black_set(const Position& pos) {
  if (pos.remaining() == 0) return ParitySet::only(pos.parity());
  std::string key;
  if (limits_.memoize) {
    key = order_type_key(pos);
    if (auto it = memo_.find(key); it != memo_.end()) return ParitySet::from_bits(it->second);
  }
  const Player mover = *pos.mover();
  ParitySet mover_set;
  for (const auto& m : canonical_moves(pos, bound_)) {
    ParitySet child = black_set(apply_move(pos, m));
    mover_set |= Verdict::from_forcible(Player::Black, child).forcible(mover);
    if (mover_set.full()) break;
  }
  check_determinacy(mover, mover_set);
  ParitySet black = to_black(mover, mover_set);
  if (limits_.memoize) memo_.emplace(std::move(key), black.bits());
  return black;
}

Verdict solve_bounded(const Position& pos, int bound, OracleLimits limits) {
  return BoundedSolver(bound, limits).solve(pos);
}

}  // namespace tpg
