#include "tpg/children_games.hpp"

#include <charconv>
#include <numeric>
#include <sstream>

#include "tpg/errors.hpp"

namespace tpg {

std::string ChildMove::label() const {
  if (rule == "split") return rule + " " + std::to_string(index) + " " + std::to_string(left);
  if (rule == "take-first" || rule == "take-last" || rule == "remove-left" ||
      rule == "remove-right")
    return rule;
  return rule + " " + std::to_string(index);
}

ChildMove ChildMove::parse(std::string_view label) {
  std::istringstream in{std::string(label)};
  ChildMove m;
  if (!(in >> m.rule)) throw InvalidInput("empty move label");
  if (m.rule == "split") {
    if (!(in >> m.index >> m.left)) throw InvalidInput("split needs index and left size");
  } else if (m.rule == "remove" || m.rule == "merge" || m.rule == "remove-black" ||
             m.rule == "merge-whites") {
    if (!(in >> m.index)) throw InvalidInput(m.rule + " needs an index");
  } else if (m.rule != "take-first" && m.rule != "take-last" && m.rule != "remove-left" &&
             m.rule != "remove-right") {
    throw InvalidInput("unknown rule '" + m.rule + "'");
  }
  return m;
}

PenniesState::PenniesState(std::vector<int> c) : clumps(std::move(c)) {
  for (int x : clumps)
    if (x < 1) throw InvalidInput("clumps must hold at least one penny");
  if (total() < 2) throw InvalidInput("need at least two pennies");
}

int PenniesState::total() const { return std::accumulate(clumps.begin(), clumps.end(), 0); }

Player PenniesState::winner() const {
  if (!is_terminal()) throw InvalidInput("pennies game is not over");
  return clumps.size() == 1 ? Player::White : Player::Black;
}

std::string PenniesState::str() const {
  std::string out;
  for (int x : clumps) {
    if (!out.empty()) out += '|';
    out += std::to_string(x);
  }
  return out;
}

PenniesState PenniesState::parse(std::string_view text) {
  std::vector<int> clumps;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto bar = text.find('|', pos);
    if (bar == std::string_view::npos) bar = text.size();
    auto token = text.substr(pos, bar - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw InvalidInput("bad pennies '" + std::string(text) + "'");
    clumps.push_back(v);
    pos = bar + 1;
  }
  return PenniesState(std::move(clumps));
}

PiecesState::PiecesState(std::vector<Piece> p) : pieces(std::move(p)) {
  if (pieces.empty()) throw InvalidInput("need at least one piece");
}

Player PiecesState::winner() const {
  if (!is_terminal()) throw InvalidInput("pieces game is not over");
  return pieces.front() == Piece::White ? Player::White : Player::Black;
}

std::string PiecesState::str() const {
  std::string out;
  for (Piece p : pieces) out += p == Piece::Black ? 'b' : 'w';
  return out;
}

PiecesState PiecesState::parse(std::string_view text) {
  std::vector<Piece> pieces;
  for (char c : text) {
    if (c == 'b' || c == 'B')
      pieces.push_back(Piece::Black);
    else if (c == 'w' || c == 'W')
      pieces.push_back(Piece::White);
    else
      throw InvalidInput("pieces use letters b/w, got '" + std::string(text) + "'");
  }
  return PiecesState(std::move(pieces));
}

PenniesState apply_pennies_move(const PenniesState& s, const ChildMove& m) {
  if (s.is_terminal()) throw IllegalMove("game over: two pennies left");
  auto c = s.clumps;
  const std::size_t k = c.size();
  auto at = [&](std::size_t i) { return c.begin() + static_cast<std::ptrdiff_t>(i); };
  auto illegal = [&](const std::string& why) -> IllegalMove {
    return IllegalMove(m.label() + ": " + why);
  };
  if (m.rule == "take-first" || m.rule == "take-last") {
    int& clump = m.rule == "take-first" ? c.front() : c.back();
    // A single-penny end clump is removed with the "remove" rule.
    if (clump < 2) throw illegal("end clump has a single penny; use remove");
    --clump;
  } else if (m.rule == "remove") {
    if (m.index >= k || c[m.index] != 1) throw illegal("only a one-penny clump can be removed");
    c.erase(at(m.index));
  } else if (m.rule == "split") {
    if (m.index >= k || c[m.index] < 3) throw illegal("split needs a clump of at least 3");
    int right = c[m.index] - 1 - m.left;
    if (m.left < 1 || right < 1) throw illegal("both new clumps must be nonempty");
    c[m.index] = m.left;
    c.insert(at(m.index + 1), right);
  } else if (m.rule == "merge") {
    if (m.index + 1 >= k) throw illegal("merge needs a clump to the right");
    if (c[m.index] + c[m.index + 1] < 3) throw illegal("merged clumps must hold at least 3");
    c[m.index] += c[m.index + 1] - 1;
    c.erase(at(m.index + 1));
  } else {
    throw illegal("not a pennies rule");
  }
  return PenniesState(std::move(c));
}

std::vector<ChildSuccessor<PenniesState>> pennies_moves(const PenniesState& s) {
  if (s.is_terminal()) throw InvalidInput("pennies_moves: game over");
  std::vector<ChildMove> moves;
  const auto& c = s.clumps;
  if (c.front() >= 2) moves.push_back({"take-first"});
  if (c.back() >= 2) moves.push_back({"take-last"});
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] == 1) moves.push_back({"remove", i});
  for (std::size_t i = 0; i < c.size(); ++i)
    for (int left = 1; left + 1 <= c[i] - 1; ++left) moves.push_back({"split", i, left});
  for (std::size_t i = 0; i + 1 < c.size(); ++i)
    if (c[i] + c[i + 1] >= 3) moves.push_back({"merge", i});
  std::vector<ChildSuccessor<PenniesState>> out;
  for (auto& m : moves) out.push_back({m, apply_pennies_move(s, m)});
  return out;
}

PiecesState apply_pieces_move(const PiecesState& s, const ChildMove& m) {
  if (s.is_terminal()) throw IllegalMove("game over: one piece left");
  auto p = s.pieces;
  const std::size_t n = p.size();
  auto at = [&](std::size_t i) { return p.begin() + static_cast<std::ptrdiff_t>(i); };
  auto illegal = [&](const std::string& why) -> IllegalMove {
    return IllegalMove(m.label() + ": " + why);
  };
  if (m.rule == "remove-black") {
    if (m.index >= n || p[m.index] != Piece::Black) throw illegal("piece is not black");
    p.erase(at(m.index));
  } else if (m.rule == "merge-whites") {
    if (m.index + 1 >= n || p[m.index] != Piece::White || p[m.index + 1] != Piece::White)
      throw illegal("needs two consecutive white pieces");
    p[m.index] = Piece::Black;
    p.erase(at(m.index + 1));
  } else if (m.rule == "remove-left") {
    p.erase(p.begin());
  } else if (m.rule == "remove-right") {
    p.pop_back();
  } else {
    throw illegal("not a pieces rule");
  }
  return PiecesState(std::move(p));
}

std::vector<ChildSuccessor<PiecesState>> pieces_moves(const PiecesState& s) {
  if (s.is_terminal()) throw InvalidInput("pieces_moves: game over");
  std::vector<ChildMove> moves;
  const auto& p = s.pieces;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == Piece::Black) moves.push_back({"remove-black", i});
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] == Piece::White && p[i + 1] == Piece::White) moves.push_back({"merge-whites", i});
  moves.push_back({"remove-left"});
  moves.push_back({"remove-right"});
  std::vector<ChildSuccessor<PiecesState>> out;
  for (auto& m : moves) out.push_back({m, apply_pieces_move(s, m)});
  return out;
}

BlockSequence pennies_to_sequence(const PenniesState& s) { return BlockSequence(s.clumps); }

BlockSequence pieces_to_sequence(const PiecesState& s) {
  std::vector<int> terms{0};
  for (Piece p : s.pieces) {
    ++terms.back();
    if (p == Piece::Black) terms.push_back(0);
  }
  ++terms.back();
  return BlockSequence(std::move(terms));
}

}  // namespace tpg
