#include "tpg/classifier.hpp"

#include <stdexcept>
#include <vector>

#include "tpg/delta_game.hpp"
#include "tpg/errors.hpp"

namespace tpg {

Verdict Verdict::from_forcible(Player player, ParitySet set) {
  if (player == Player::Black) return Verdict(set);
  if (set.full()) return white_controls();
  if (set.empty()) return black_controls();
  return Verdict(set);
}

Verdict::Kind Verdict::kind() const {
  if (black_.full()) return Kind::BlackControls;
  if (black_.empty()) return Kind::WhiteControls;
  return Kind::Forced;
}

Parity Verdict::forced_parity() const {
  if (kind() != Kind::Forced) throw std::logic_error("verdict is not forced");
  return black_.contains(Parity::Even) ? Parity::Even : Parity::Odd;
}

std::optional<Player> Verdict::controller() const {
  switch (kind()) {
    case Kind::BlackControls:
      return Player::Black;
    case Kind::WhiteControls:
      return Player::White;
    case Kind::Forced:
      return std::nullopt;
  }
  return std::nullopt;
}

ParitySet Verdict::forcible(Player player) const {
  if (player == Player::Black) return black_;
  if (black_.full()) return ParitySet::none();
  if (black_.empty()) return ParitySet::all();
  return black_;
}

std::string Verdict::str() const {
  switch (kind()) {
    case Kind::BlackControls:
      return "black-controls";
    case Kind::WhiteControls:
      return "white-controls";
    case Kind::Forced:
      return forced_parity() == Parity::Even ? "forced-even" : "forced-odd";
  }
  return "?";
}

Verdict Verdict::parse(std::string_view text) {
  if (text == "black-controls") return black_controls();
  if (text == "white-controls") return white_controls();
  if (text == "forced-even") return forced(Parity::Even);
  if (text == "forced-odd") return forced(Parity::Odd);
  throw InvalidInput("unknown verdict '" + std::string(text) + "'");
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::FIN_EXACT: return "FIN_EXACT";
    case CaseLabel::FIN_DELTA: return "FIN_DELTA";
    case CaseLabel::FIN_NOPIV: return "FIN_NOPIV";
    case CaseLabel::FIN_ONEPIV: return "FIN_ONEPIV";
    case CaseLabel::FIN_MANYPIV: return "FIN_MANYPIV";
    case CaseLabel::Z_ONEPIV: return "Z_ONEPIV";
    case CaseLabel::Z_MANYPIV: return "Z_MANYPIV";
    case CaseLabel::Z_BI_NOPIV: return "Z_BI_NOPIV";
    case CaseLabel::Z_PLUS_NOPIV: return "Z_PLUS_NOPIV";
    case CaseLabel::Z_MINUS_NOPIV: return "Z_MINUS_NOPIV";
    case CaseLabel::R_PIVOT: return "R_PIVOT";
    case CaseLabel::R1a: return "R1a";
    case CaseLabel::R1b: return "R1b";
    case CaseLabel::R1c: return "R1c";
    case CaseLabel::R1d: return "R1d";
    case CaseLabel::R1e: return "R1e";
    case CaseLabel::R1f: return "R1f";
    case CaseLabel::R2: return "R2";
    case CaseLabel::R3: return "R3";
    case CaseLabel::R4: return "R4";
    case CaseLabel::R5: return "R5";
    case CaseLabel::R6: return "R6";
    case CaseLabel::R7a: return "R7a";
    case CaseLabel::R7b: return "R7b";
    case CaseLabel::R7c: return "R7c";
    case CaseLabel::R8a: return "R8a";
    case CaseLabel::R8b: return "R8b";
    case CaseLabel::R8c: return "R8c";
    case CaseLabel::BASE_ENUM: return "BASE_ENUM";
    case CaseLabel::WHITE_FOLD: return "WHITE_FOLD";
  }
  return "?";
}

Verdict verdict_fold(std::span<const Verdict> children, Player mover) {
  if (children.empty()) throw InvalidInput("verdict_fold: no children");
  ParitySet reachable;
  for (const auto& v : children) reachable |= v.forcible(mover);
  return Verdict::from_forcible(mover, reachable);
}

std::string render_phrase(const Verdict& verdict, std::int64_t remaining) {
  auto who = verdict.controller();
  if (!who || remaining == 0) return verdict.str();
  return *who == mover_for(remaining) ? "first-player" : "second-player";
}

namespace {

using L = CaseLabel;

Classification result(Verdict v, CaseLabel label) { return {v, label}; }

// Forced outcome of the form "initial + l + (n-1)/2" for Black's turn (n odd).
Parity end_block_drift(const Position& pos, const FeatureSet& f) {
  return pos.parity() + parity_of(f.end_block_size) + parity_of((pos.remaining() - 1) / 2);
}

// Black's last move sits below an occupied domain maximum, so the end block
// flips it once more when l is odd.
Parity end_block_shift(const Position& pos, const FeatureSet& f) {
  return pos.parity() + parity_of(f.end_block_size);
}

std::vector<Address> moves_for_enumeration(const Position& pos, int bound) {
  if (pos.domain().is_finite()) return all_free_moves(pos);
  return canonical_moves(pos, bound);
}

Classification fold_children(const Position& pos, const ClassifyOptions& options,
                             const std::vector<Address>& moves, CaseLabel label) {
  std::vector<Verdict> children;
  children.reserve(moves.size());
  for (const auto& m : moves) children.push_back(classify(apply_move(pos, m), options).verdict);
  return result(verdict_fold(children, *pos.mover()), label);
}

Classification classify_finite(const Position& pos) {
  const std::int64_t free = pos.domain().finite_size() - static_cast<std::int64_t>(pos.occupied().size());
  const std::int64_t r = pos.remaining();
  if (free == r) return result(Verdict::white_controls(), L::FIN_EXACT);
  if (free == r + 1)
    return result(Verdict::controlled_by(delta_winner(encode_blocks(pos))), L::FIN_DELTA);
  const int pivots = features(pos).pivot_count;
  if (pivots == 0) return result(Verdict::white_controls(), L::FIN_NOPIV);
  if (pivots == 1) return result(Verdict::controlled_by(*pos.mover()), L::FIN_ONEPIV);
  return result(Verdict::black_controls(), L::FIN_MANYPIV);
}

// Domain order-isomorphic to Z, Z+ or Z-.
Classification classify_integer_like(const Position& pos) {
  const auto f = features(pos);
  const Player mover = *pos.mover();
  if (f.pivot_count == 1) return result(Verdict::controlled_by(mover), L::Z_ONEPIV);
  if (f.pivot_count > 1) return result(Verdict::black_controls(), L::Z_MANYPIV);
  const std::int64_t r = pos.remaining();
  switch (pos.domain().block(0).type) {
    case BlockType::OmegaBi:
      return result(Verdict::controlled_by(opponent(mover)), L::Z_BI_NOPIV);
    case BlockType::OmegaUp:
      return result(Verdict::forced(pos.parity()), L::Z_PLUS_NOPIV);
    case BlockType::OmegaDown: {
      Parity p = r % 2 == 0 ? pos.parity() + parity_of(r / 2) : end_block_drift(pos, f);
      return result(Verdict::forced(p), L::Z_MINUS_NOPIV);
    }
    default:
      break;
  }
  throw std::logic_error("classify_integer_like: not an integer-like domain");
}

// Black to move, not his last turn, at least one finite non-exhausted D-block.
Classification classify_with_fnedb(const Position& pos, const FeatureSet& f) {
  int noncentral = 0;
  const DBlockFeature* lone = nullptr;
  for (const auto& d : f.dblocks) {
    if (!d.is_fnedb) continue;
    if (d.is_central) return result(Verdict::black_controls(), L::R5);
    ++noncentral;
    lone = &d;
  }
  if (noncentral >= 2) return result(Verdict::black_controls(), L::R6);

  auto another = [&](bool DBlockFeature::*flag) {
    for (const auto& d : f.dblocks)
      if (&d != lone && d.*flag) return true;
    return false;
  };
  if (lone->is_rightmost) {
    if (another(&DBlockFeature::has_largest_free))
      return result(Verdict::black_controls(), L::R7a);
    if (!f.min_free_exists) return result(Verdict::black_controls(), L::R7b);
    return result(Verdict::forced(end_block_shift(pos, f)), L::R7c);
  }
  if (lone->is_leftmost) {
    if (another(&DBlockFeature::has_smallest_free))
      return result(Verdict::black_controls(), L::R8a);
    if (!f.max_free_exists) return result(Verdict::black_controls(), L::R8b);
    return result(Verdict::forced(end_block_drift(pos, f)), L::R8c);
  }
  throw std::logic_error("noncentral FNEDB that is neither leftmost nor rightmost");
}

// Black to move, not his last turn, every non-exhausted D-block infinite.
Classification classify_infinite_blocks(const Position& pos, const FeatureSet& f) {
  const bool cm = f.choosable_m_not_min;
  const bool cM = f.choosable_M_not_max;
  if (f.some_smallest_free && f.some_largest_free) {
    if (cm && cM) return result(Verdict::black_controls(), L::R1a);
    if (!cm && !cM) return result(Verdict::white_controls(), L::R1f);
    if (!cm) {
      if (!f.max_free_exists) return result(Verdict::black_controls(), L::R1b);
      return result(Verdict::forced(end_block_drift(pos, f)), L::R1e);
    }
    if (!f.min_free_exists) return result(Verdict::black_controls(), L::R1c);
    return result(Verdict::forced(end_block_shift(pos, f)), L::R1d);
  }
  if (f.some_smallest_free) return result(Verdict::forced(end_block_shift(pos, f)), L::R2);
  if (f.some_largest_free) return result(Verdict::forced(end_block_drift(pos, f)), L::R3);
  return result(Verdict::white_controls(), L::R4);
}

}  // namespace

Classification classify(const Position& pos, const ClassifyOptions& options) {
  const std::int64_t r = pos.remaining();
  if (r == 0) return result(Verdict::forced(pos.parity()), L::BASE_ENUM);
  if (r <= 2)
    return fold_children(pos, options, moves_for_enumeration(pos, options.bound), L::BASE_ENUM);

  const auto& domain = pos.domain();
  if (domain.is_finite()) return classify_finite(pos);
  if (domain.block_count() == 1 && domain.block(0).type != BlockType::Dense)
    return classify_integer_like(pos);

  if (*pos.mover() == Player::White)
    return fold_children(pos, options, canonical_moves(pos, options.bound), L::WHITE_FOLD);

  const auto f = features(pos);
  if (f.pivot_count > 0) return result(Verdict::black_controls(), L::R_PIVOT);
  for (const auto& d : f.dblocks)
    if (d.is_fnedb) return classify_with_fnedb(pos, f);
  return classify_infinite_blocks(pos, f);
}

}  // namespace tpg
