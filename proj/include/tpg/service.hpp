#pragma once

// Human-vs-engine sessions over the number line and the two children's games,
// plus the analysis payloads shared by the HTTP API and the CLI.

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "json.hpp"
#include "tpg/children_games.hpp"
#include "tpg/classifier.hpp"
#include "tpg/delta_game.hpp"
#include "tpg/domain.hpp"

namespace tpg {

using Json = nlohmann::ordered_json;

// {verdict, case, phrase, mover, remaining, parity, pivots, ell, free, moves, delta?}
Json analyze_position(const Position& pos, int bound = kDefaultBound);
// {sequence, delta, mover, winner, terminal, best_move?}
Json analyze_sequence(const BlockSequence& seq);
Json analyze_pennies(const PenniesState& s);
Json analyze_pieces(const PiecesState& s);

// Exhaustive oracle verdict for `solve`; finite domains use the exact solver,
// symbolic ones the bounded solver.
Json solve_position(const Position& pos, int bound = kDefaultBound);

// Addresses as accepted by the API: "3", "1:2", "0:1/2" or {"block", "offset"}.
Address address_from_request(const nlohmann::json& j);
// Position from {"domain", "occupied", "parity", "remaining"}; occupied entries
// use address_from_request, parity defaults to even. `normalized` reports
// whether the domain text had to be normalized.
Position position_from_request(const nlohmann::json& j, bool* normalized = nullptr);

enum class Variant { NumberLine, Pennies, Pieces };
std::string_view to_string(Variant v);
Variant parse_variant(std::string_view text);  // "number-line" | "line", "pennies", "pieces"

using GameState = std::variant<Position, PenniesState, PiecesState>;

struct HistoryEntry {
  Player side = Player::Black;
  std::string move;
  bool engine = false;
};

struct Session {
  explicit Session(GameState start) : initial(start), state(std::move(start)) {}

  std::string id;
  Variant variant = Variant::NumberLine;
  Player human = Player::Black;
  Parity black_target = Parity::Even;  // number line only; White wants the other parity
  int bound = kDefaultBound;
  GameState initial;
  GameState state;
  std::vector<HistoryEntry> history;
  std::mutex mutex;  // one writer per session
};

// Deterministic engine reply for the side to move. Empty when the game is over.
std::optional<std::string> engine_reply(const Session& s);

class SessionManager {
 public:
  explicit SessionManager(std::optional<std::filesystem::path> log_dir = std::nullopt);

  // {variant, config} -> {id, state, engine_move, analysis}
  Json create(const nlohmann::json& request);
  // -> {id, variant, state, history, analysis}
  Json get(const std::string& id);
  // {move, side?} -> {state, engine_move, analysis}
  Json move(const std::string& id, const nlohmann::json& request);
  // Rebuilds the session from its initial state and history; same shape as get().
  Json replay(const std::string& id);

  std::size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id) const;
  std::string fresh_id();
  void log(const Session& s, const Json& event) const;

  std::optional<std::filesystem::path> log_dir_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_ = 0;
};

}  // namespace tpg
