#include "tpg/delta_game.hpp"

#include <charconv>
#include <cstdlib>

#include "tpg/errors.hpp"

namespace tpg {

BlockSequence::BlockSequence(std::vector<int> terms) : terms_(std::move(terms)) {
  for (int t : terms_) {
    if (t < 1) throw InvalidInput("sequence terms must be >= 1");
    sum_ += t;
  }
  if (sum_ < 2) throw InvalidInput("sequence sum must be >= 2");
}

std::string BlockSequence::str() const {
  std::string out;
  for (int t : terms_) {
    if (!out.empty()) out += ',';
    out += std::to_string(t);
  }
  return out;
}

BlockSequence BlockSequence::parse(std::string_view text) {
  std::vector<int> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw InvalidInput("bad sequence '" + std::string(text) + "'");
    terms.push_back(v);
    pos = comma + 1;
  }
  return BlockSequence(std::move(terms));
}

std::string DeltaMove::str() const {
  switch (kind) {
    case Kind::DecHead:
      return "dec-head";
    case Kind::DecTail:
      return "dec-tail";
    case Kind::RemoveUnit:
      return "remove(" + std::to_string(index) + ")";
    case Kind::Split:
      return "split(" + std::to_string(index) + "," + std::to_string(left) + ")";
    case Kind::Merge:
      return "merge(" + std::to_string(index) + ")";
  }
  return "?";
}

int delta(const BlockSequence& seq) {
  int result = 0;
  bool green = true;
  for (int t : seq.terms()) {
    if (t % 2 == 0)
      green = !green;
    else
      result += green ? 1 : -1;
  }
  return result;
}

BlockSequence apply_delta_move(const BlockSequence& seq, const DeltaMove& move) {
  auto terms = seq.terms();
  const std::size_t k = terms.size();
  auto idx = static_cast<std::ptrdiff_t>(move.index);
  auto illegal = [&](const char* why) {
    throw IllegalMove(move.str() + " on (" + seq.str() + "): " + why);
  };
  if (seq.is_terminal()) illegal("game is over");
  switch (move.kind) {
    case DeltaMove::Kind::DecHead:
      if (terms.front() < 2) illegal("first term must be >= 2");
      --terms.front();
      break;
    case DeltaMove::Kind::DecTail:
      if (terms.back() < 2) illegal("last term must be >= 2");
      --terms.back();
      break;
    case DeltaMove::Kind::RemoveUnit:
      if (move.index >= k || terms[move.index] != 1) illegal("term must equal 1");
      terms.erase(terms.begin() + idx);
      break;
    case DeltaMove::Kind::Split: {
      if (move.index >= k || terms[move.index] < 3) illegal("term must be >= 3");
      int right = terms[move.index] - 1 - move.left;
      if (move.left < 1 || right < 1) illegal("both parts must be >= 1");
      terms[move.index] = move.left;
      terms.insert(terms.begin() + idx + 1, right);
      break;
    }
    case DeltaMove::Kind::Merge:
      if (move.index + 1 >= k) illegal("needs a right neighbour");
      if (terms[move.index] + terms[move.index + 1] < 3) illegal("pair must sum to >= 3");
      terms[move.index] += terms[move.index + 1] - 1;
      terms.erase(terms.begin() + idx + 1);
      break;
  }
  return BlockSequence(std::move(terms));
}

std::vector<std::pair<DeltaMove, BlockSequence>> legal_delta_moves(const BlockSequence& seq) {
  if (seq.is_terminal()) throw InvalidInput("legal_delta_moves: terminal sequence");
  using K = DeltaMove::Kind;
  const auto& t = seq.terms();
  const std::size_t k = t.size();
  std::vector<DeltaMove> moves;
  if (t.front() >= 2) moves.push_back({K::DecHead});
  if (t.back() >= 2) moves.push_back({K::DecTail});
  for (std::size_t i = 0; i < k; ++i)
    if (t[i] == 1) moves.push_back({K::RemoveUnit, i});
  for (std::size_t i = 0; i < k; ++i)
    for (int left = 1; left <= t[i] - 2; ++left) moves.push_back({K::Split, i, left});
  for (std::size_t i = 0; i + 1 < k; ++i)
    if (t[i] + t[i + 1] >= 3) moves.push_back({K::Merge, i});

  std::vector<std::pair<DeltaMove, BlockSequence>> out;
  out.reserve(moves.size());
  for (const auto& m : moves) out.emplace_back(m, apply_delta_move(seq, m));
  return out;
}

Player delta_winner(const BlockSequence& seq) {
  const int d = std::abs(delta(seq));
  if (seq.mover() == Player::White) return d == 1 ? Player::White : Player::Black;
  return d != 0 ? Player::Black : Player::White;
}

std::pair<DeltaMove, BlockSequence> delta_best_move(const BlockSequence& seq) {
  const Player me = seq.mover();
  for (auto& [move, next] : legal_delta_moves(seq))
    if (delta_winner(next) == me) return {move, next};
  throw LosingPosition("no winning move for " + std::string(to_string(me)) + " from (" +
                       seq.str() + ")");
}

BlockSequence encode_blocks(const Position& pos) {
  if (!pos.domain().is_finite())
    throw InvalidInput("encode_blocks needs a finite domain");
  const std::int64_t d = pos.domain().finite_size();
  const auto m = static_cast<std::int64_t>(pos.occupied().size());
  if (d != m + pos.remaining() + 1)
    throw InvalidInput("encode_blocks needs |D| = |S| + remaining + 1");

  std::vector<std::int64_t> pivot_lows;
  for (const auto& sb : s_blocks(pos))
    if (sb.is_pivot) pivot_lows.push_back(sb.lowest.offset.num());

  std::vector<int> terms(pivot_lows.size() + 1, 0);
  std::size_t slot = 0;
  for (std::int64_t x = 0; x < d; ++x) {
    while (slot < pivot_lows.size() && x > pivot_lows[slot]) ++slot;
    if (pos.is_free({0, Rational(x)})) ++terms[slot];
  }
  return BlockSequence(std::move(terms));
}

}  // namespace tpg
