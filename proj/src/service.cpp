#include "tpg/service.hpp"

#include <cstdio>
#include <fstream>
#include <random>

#include "tpg/errors.hpp"
#include "tpg/oracle.hpp"
#include "tpg/serialization.hpp"
#include "tpg/strategy.hpp"

namespace tpg {

namespace {

Json address_list(const std::vector<Address>& v) {
  auto out = Json::array();
  for (const auto& a : v) out.push_back(render_address(a));
  return out;
}

Json player_or_null(std::optional<Player> p) {
  if (!p) return nullptr;
  return std::string(to_string(*p));
}

Player parse_player(const nlohmann::json& j) {
  const auto text = j.get<std::string>();
  if (text == "black") return Player::Black;
  if (text == "white") return Player::White;
  throw InvalidInput("unknown side '" + text + "'");
}

template <class F>
auto json_guard(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad request: ") + e.what());
  }
}

// The side to move and whether the game is over, per variant.
std::optional<Player> mover_of(const GameState& g) {
  if (auto* p = std::get_if<Position>(&g)) return p->mover();
  if (auto* s = std::get_if<PenniesState>(&g))
    return s->is_terminal() ? std::nullopt : std::optional(s->mover());
  const auto& q = std::get<PiecesState>(g);
  return q.is_terminal() ? std::nullopt : std::optional(q.mover());
}

Parity target_of(const Session& s, Player p) {
  return p == Player::Black ? s.black_target : flip(s.black_target);
}

std::optional<Player> winner_of(const Session& s) {
  if (mover_of(s.state)) return std::nullopt;
  if (auto* p = std::get_if<Position>(&s.state))
    return p->parity() == s.black_target ? Player::Black : Player::White;
  if (auto* q = std::get_if<PenniesState>(&s.state)) return q->winner();
  return std::get<PiecesState>(s.state).winner();
}

Json state_json(const Session& s) {
  Json j;
  if (auto* p = std::get_if<Position>(&s.state)) {
    j["position"] = position_to_json(*p);
    j["targets"] = {{"black", std::string(to_string(s.black_target))},
                    {"white", std::string(to_string(flip(s.black_target)))}};
  } else if (auto* q = std::get_if<PenniesState>(&s.state)) {
    j["clumps"] = q->str();
  } else {
    j["pieces"] = std::get<PiecesState>(s.state).str();
  }
  j["human"] = std::string(to_string(s.human));
  j["engine"] = std::string(to_string(opponent(s.human)));
  j["to_move"] = player_or_null(mover_of(s.state));
  j["over"] = !mover_of(s.state).has_value();
  j["winner"] = player_or_null(winner_of(s));
  return j;
}

Json analysis_json(const Session& s) {
  if (auto* p = std::get_if<Position>(&s.state)) {
    Json j = analyze_position(*p, s.bound);
    if (auto m = p->mover()) {
      Objective goal = Objective::force(target_of(s, *m));
      j["mover_holds_objective"] =
          goal.granted_by(Verdict::parse(j["verdict"].get<std::string>()), *m);
    }
    return j;
  }
  if (auto* q = std::get_if<PenniesState>(&s.state)) return analyze_pennies(*q);
  return analyze_pieces(std::get<PiecesState>(s.state));
}

Json history_json(const Session& s) {
  auto out = Json::array();
  for (const auto& h : s.history)
    out.push_back({{"side", std::string(to_string(h.side))},
                   {"move", h.move},
                   {"by", h.engine ? "engine" : "human"}});
  return out;
}

// Applies `move` for the side to move; returns the move in canonical text form.
std::string apply_to(Session& s, const nlohmann::json& move) {
  if (auto* p = std::get_if<Position>(&s.state)) {
    Address a = address_from_request(move);
    if (!is_valid_address(p->domain(), a))
      throw IllegalMove("off-domain: " + render_address(a) + " is not an element of the domain");
    if (!p->is_free(a)) throw IllegalMove("occupied: " + render_address(a) + " is already taken");
    s.state = apply_move(*p, a);
    return render_address(a);
  }
  const ChildMove m = ChildMove::parse(json_guard([&] { return move.get<std::string>(); }));
  if (auto* q = std::get_if<PenniesState>(&s.state)) {
    s.state = apply_pennies_move(*q, m);
  } else {
    s.state = apply_pieces_move(std::get<PiecesState>(s.state), m);
  }
  return m.label();
}

// Winner of a children's-game state under perfect play, via its encoding.
template <class State>
Player perfect_winner(const State& s, BlockSequence (*encode)(const State&)) {
  if (s.is_terminal()) return s.winner();
  return delta_winner(encode(s));
}

template <class State>
std::string child_reply(const State& s,
                        std::vector<ChildSuccessor<State>> (*moves)(const State&),
                        BlockSequence (*encode)(const State&)) {
  const Player me = s.mover();
  const auto options = moves(s);
  for (const auto& o : options)
    if (perfect_winner(o.state, encode) == me) return o.move.label();
  // Losing anyway: leave the opponent as few winning replies as possible.
  std::size_t best = 0;
  std::size_t fewest = SIZE_MAX;
  for (std::size_t i = 0; i < options.size(); ++i) {
    const auto& next = options[i].state;
    std::size_t wins = 1;
    if (!next.is_terminal()) {
      wins = 0;
      for (const auto& reply : moves(next))
        if (perfect_winner(reply.state, encode) != me) ++wins;
    }
    if (wins < fewest) {
      fewest = wins;
      best = i;
    }
  }
  return options[best].move.label();
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Builds a session from a create request; id and logging are the caller's.
std::shared_ptr<Session> build_session(const nlohmann::json& request) {
  return json_guard([&] {
    const Variant variant = parse_variant(request.at("variant").get<std::string>());
    const nlohmann::json config = request.value("config", nlohmann::json::object());
    std::shared_ptr<Session> s;
    switch (variant) {
      case Variant::NumberLine: {
        Position pos = position_from_request(config);
        if (pos.is_terminal()) throw InvalidInput("position has no turns left");
        s = std::make_shared<Session>(pos);
        s->bound = config.value("bound", kDefaultBound);
        if (s->bound < 1) throw InvalidInput("bound must be positive");
        break;
      }
      case Variant::Pennies: {
        auto st = PenniesState::parse(config.at("clumps").get<std::string>());
        if (st.is_terminal()) throw InvalidInput("pennies game is already over");
        s = std::make_shared<Session>(st);
        break;
      }
      case Variant::Pieces: {
        auto st = PiecesState::parse(config.at("pieces").get<std::string>());
        if (st.is_terminal()) throw InvalidInput("pieces game is already over");
        s = std::make_shared<Session>(st);
        break;
      }
    }
    s->variant = variant;
    s->human = config.contains("human") ? parse_player(config.at("human")) : *mover_of(s->state);
    if (auto* p = std::get_if<Position>(&s->state)) {
      if (config.contains("black_target")) {
        s->black_target = parse_parity(config.at("black_target").get<std::string>());
      } else {
        // Give the engine whatever the position grants it.
        const Verdict v = classify(*p, {s->bound}).verdict;
        const Player engine = opponent(s->human);
        if (v.kind() == Verdict::Kind::Forced) {
          s->black_target =
              engine == Player::Black ? v.forced_parity() : flip(v.forced_parity());
        } else {
          s->black_target = Parity::Even;
        }
      }
    }
    return s;
  });
}

// Lets the engine move while it is its turn. Returns the engine's move, if any.
std::optional<std::string> run_engine(Session& s) {
  auto m = mover_of(s.state);
  if (!m || *m == s.human) return std::nullopt;
  auto reply = engine_reply(s);
  if (!reply) return std::nullopt;
  nlohmann::json move = *reply;
  std::string text = apply_to(s, move);
  s.history.push_back({*m, text, true});
  return text;
}

}  // namespace

Address address_from_request(const nlohmann::json& j) {
  if (j.is_string()) return parse_address(j.get<std::string>());
  if (j.is_number_integer()) return Address{0, Rational(j.get<std::int64_t>())};
  if (j.is_object()) return address_from_json(j);
  throw InvalidInput("move must be an address string or {block, offset}");
}

Position position_from_request(const nlohmann::json& j, bool* normalized) {
  return json_guard([&] {
    auto domain = parse_domain(j.at("domain").get<std::string>(), normalized);
    std::vector<Address> occ;
    if (j.contains("occupied")) {
      const auto& list = j.at("occupied");
      if (list.is_string()) {
        occ = parse_address_list(list.get<std::string>());
      } else {
        for (const auto& a : list) occ.push_back(address_from_request(a));
      }
    }
    std::sort(occ.begin(), occ.end(), [&](const Address& a, const Address& b) {
      return compare(domain, a, b) < 0;
    });
    Parity parity = j.contains("parity") ? parse_parity(j.at("parity").get<std::string>())
                                         : Parity::Even;
    return Position(std::move(domain), std::move(occ), parity,
                    j.at("remaining").get<std::int64_t>());
  });
}

Json analyze_position(const Position& pos, int bound) {
  const auto c = classify(pos, {bound});
  const auto f = features(pos);
  Json j;
  j["verdict"] = c.verdict.str();
  j["case"] = std::string(to_string(c.label));
  j["phrase"] = render_phrase(c.verdict, pos.remaining());
  j["mover"] = player_or_null(pos.mover());
  j["remaining"] = pos.remaining();
  j["parity"] = std::string(to_string(pos.parity()));
  auto pivots = Json::array();
  for (const auto& sb : s_blocks(pos))
    if (sb.is_pivot)
      pivots.push_back({{"from", render_address(sb.lowest)},
                        {"to", render_address(sb.highest)},
                        {"size", sb.size}});
  j["pivots"] = std::move(pivots);
  j["ell"] = f.end_block_size;
  if (f.free_count.infinite)
    j["free"] = "infinite";
  else
    j["free"] = f.free_count.value;
  if (pos.remaining() > 0) {
    j["moves"] = address_list(pos.domain().is_finite() ? all_free_moves(pos)
                                                       : canonical_moves(pos, bound));
  } else {
    j["moves"] = Json::array();
  }
  if (pos.domain().is_finite() && pos.remaining() >= 1 &&
      pos.domain().finite_size() ==
          static_cast<std::int64_t>(pos.occupied().size()) + pos.remaining() + 1)
    j["delta"] = analyze_sequence(encode_blocks(pos));
  return j;
}

Json analyze_sequence(const BlockSequence& seq) {
  Json j;
  j["sequence"] = seq.str();
  j["delta"] = delta(seq);
  j["mover"] = std::string(to_string(seq.mover()));
  j["winner"] = std::string(to_string(delta_winner(seq)));
  j["terminal"] = seq.is_terminal();
  if (!seq.is_terminal() && delta_winner(seq) == seq.mover()) {
    auto [m, next] = delta_best_move(seq);
    j["best_move"] = {{"move", m.str()}, {"result", next.str()}};
  }
  return j;
}

Json analyze_pennies(const PenniesState& s) {
  Json j = analyze_sequence(pennies_to_sequence(s));
  j["state"] = s.str();
  auto moves = Json::array();
  if (!s.is_terminal())
    for (const auto& m : pennies_moves(s)) moves.push_back(m.move.label());
  j["moves"] = std::move(moves);
  return j;
}

Json analyze_pieces(const PiecesState& s) {
  Json j = analyze_sequence(pieces_to_sequence(s));
  j["state"] = s.str();
  auto moves = Json::array();
  if (!s.is_terminal())
    for (const auto& m : pieces_moves(s)) moves.push_back(m.move.label());
  j["moves"] = std::move(moves);
  return j;
}

Json solve_position(const Position& pos, int bound) {
  Json j;
  if (pos.domain().is_finite()) {
    j["oracle"] = solve_finite(pos).str();
    j["exact"] = true;
  } else {
    j["oracle"] = solve_bounded(pos, bound).str();
    j["exact"] = false;
    j["bound"] = bound;
  }
  return j;
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::NumberLine: return "number-line";
    case Variant::Pennies: return "pennies";
    case Variant::Pieces: return "pieces";
  }
  return "?";
}

Variant parse_variant(std::string_view text) {
  if (text == "number-line" || text == "line") return Variant::NumberLine;
  if (text == "pennies") return Variant::Pennies;
  if (text == "pieces") return Variant::Pieces;
  throw InvalidInput("unknown variant '" + std::string(text) + "'");
}

std::optional<std::string> engine_reply(const Session& s) {
  if (auto* p = std::get_if<Position>(&s.state)) {
    if (p->is_terminal()) return std::nullopt;
    const Player me = *p->mover();
    const Parity target = target_of(s, me);
    const Objective goal = Objective::force(target);
    if (goal.granted_by(classify(*p, {s.bound}).verdict, me))
      return render_address(winning_move(*p, goal, {s.bound}));
    // Resist: exact search where it is affordable, greedy parity elsewhere.
    const bool small = p->domain().is_finite() && p->domain().finite_size() <= OracleLimits{}.max_domain;
    AgentContext ctx(0, s.bound);
    Agent agent{small ? Policy::MinimaxOracle : Policy::GreedyParity, target, s.bound};
    return render_address(choose_move(agent, *p, ctx));
  }
  if (auto* q = std::get_if<PenniesState>(&s.state)) {
    if (q->is_terminal()) return std::nullopt;
    return child_reply<PenniesState>(*q, &pennies_moves, &pennies_to_sequence);
  }
  const auto& q = std::get<PiecesState>(s.state);
  if (q.is_terminal()) return std::nullopt;
  return child_reply<PiecesState>(q, &pieces_moves, &pieces_to_sequence);
}

SessionManager::SessionManager(std::optional<std::filesystem::path> log_dir)
    : log_dir_(std::move(log_dir)), salt_(std::random_device{}()) {
  if (log_dir_) std::filesystem::create_directories(*log_dir_);
}

std::string SessionManager::fresh_id() {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(mix(++counter_ ^ (salt_ << 20))));
  return buf;
}

void SessionManager::log(const Session& s, const Json& event) const {
  if (!log_dir_) return;
  std::ofstream out(*log_dir_ / (s.id + ".jsonl"), std::ios::app);
  out << event.dump() << "\n";
}

std::shared_ptr<Session> SessionManager::find(const std::string& id) const {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw UnknownSession("unknown session '" + id + "'");
  return it->second;
}

std::size_t SessionManager::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

Json SessionManager::create(const nlohmann::json& request) {
  auto s = build_session(request);
  std::lock_guard session_lock(s->mutex);
  {
    std::unique_lock lock(mutex_);
    s->id = fresh_id();
    sessions_[s->id] = s;
  }
  log(*s, {{"event", "create"}, {"request", request}});
  auto engine_move = run_engine(*s);
  if (engine_move)
    log(*s, {{"event", "move"}, {"side", std::string(to_string(s->history.back().side))},
             {"move", *engine_move}, {"by", "engine"}});
  Json j;
  j["id"] = s->id;
  j["variant"] = std::string(to_string(s->variant));
  j["state"] = state_json(*s);
  j["engine_move"] = engine_move ? Json(*engine_move) : Json(nullptr);
  j["analysis"] = analysis_json(*s);
  return j;
}

Json SessionManager::get(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  Json j;
  j["id"] = s->id;
  j["variant"] = std::string(to_string(s->variant));
  j["state"] = state_json(*s);
  j["history"] = history_json(*s);
  j["analysis"] = analysis_json(*s);
  return j;
}

Json SessionManager::move(const std::string& id, const nlohmann::json& request) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  const auto to_move = mover_of(s->state);
  if (!to_move) throw OutOfTurn("game over");
  if (request.contains("side")) {
    const Player side = json_guard([&] { return parse_player(request.at("side")); });
    if (side != *to_move) throw OutOfTurn("not " + std::string(to_string(side)) + "'s turn");
  }
  if (*to_move != s->human) throw OutOfTurn("it is the engine's turn");
  if (!request.contains("move")) throw InvalidInput("request needs a move");

  std::string text = apply_to(*s, request.at("move"));
  s->history.push_back({*to_move, text, false});
  log(*s, {{"event", "move"}, {"side", std::string(to_string(*to_move))}, {"move", text},
           {"by", "human"}});
  auto engine_move = run_engine(*s);
  if (engine_move)
    log(*s, {{"event", "move"}, {"side", std::string(to_string(s->history.back().side))},
             {"move", *engine_move}, {"by", "engine"}});
  Json j;
  j["state"] = state_json(*s);
  j["engine_move"] = engine_move ? Json(*engine_move) : Json(nullptr);
  j["analysis"] = analysis_json(*s);
  return j;
}

Json SessionManager::replay(const std::string& id) {
  auto s = find(id);
  std::lock_guard lock(s->mutex);
  Session copy(s->initial);
  copy.id = s->id;
  copy.variant = s->variant;
  copy.human = s->human;
  copy.black_target = s->black_target;
  copy.bound = s->bound;
  run_engine(copy);
  for (const auto& h : s->history) {
    if (h.engine) continue;
    const Player side = *mover_of(copy.state);
    copy.history.push_back({side, apply_to(copy, h.move), false});
    run_engine(copy);
  }
  Json j;
  j["id"] = copy.id;
  j["variant"] = std::string(to_string(copy.variant));
  j["state"] = state_json(copy);
  j["history"] = history_json(copy);
  j["analysis"] = analysis_json(copy);
  return j;
}

}  // namespace tpg
