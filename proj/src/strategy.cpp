#include "tpg/strategy.hpp"

#include "tpg/errors.hpp"
#include "tpg/serialization.hpp"

namespace tpg {

bool Objective::granted_by(const Verdict& v, Player player) const {
  ParitySet mine = v.forcible(player);
  return control ? mine.full() : mine.contains(parity);
}

std::string Objective::str() const {
  return control ? "control" : "force-" + std::string(to_string(parity));
}

Address winning_move(const Position& pos, const Objective& objective,
                     const ClassifyOptions& options) {
  auto mover = pos.mover();
  if (!mover) throw InvalidInput("winning_move: no turns left");
  if (!objective.granted_by(classify(pos, options).verdict, *mover))
    throw LosingPosition("objective " + objective.str() + " is not achievable for " +
                         std::string(to_string(*mover)));
  for (const auto& m : canonical_moves(pos, options.bound)) {
    if (objective.granted_by(classify(apply_move(pos, m), options).verdict, *mover)) return m;
  }
  // No single move keeps both parities open, so control is spent here.
  if (objective.control) return winning_move(pos, Objective::force(Parity::Even), options);
  throw LosingPosition("no canonical move keeps objective " + objective.str());
}

std::string_view to_string(Policy policy) {
  switch (policy) {
    case Policy::ClassifierLookahead: return "classifier";
    case Policy::MinimaxOracle: return "oracle";
    case Policy::UniformRandom: return "random";
    case Policy::GreedyParity: return "greedy";
  }
  return "?";
}

Policy parse_policy(std::string_view text) {
  if (text == "classifier") return Policy::ClassifierLookahead;
  if (text == "oracle") return Policy::MinimaxOracle;
  if (text == "random") return Policy::UniformRandom;
  if (text == "greedy") return Policy::GreedyParity;
  throw InvalidInput("unknown policy '" + std::string(text) + "'");
}

std::string Agent::name() const {
  return std::string(to_string(policy)) + "(" + std::string(to_string(target)) + ")";
}

Verdict AgentContext::oracle(const Position& pos) {
  if (pos.domain().is_finite()) return finite_.solve(pos);
  return bounded_.solve(pos);
}

Address choose_move(const Agent& agent, const Position& pos, AgentContext& ctx) {
  const Player me = *pos.mover();
  const Objective goal = Objective::force(agent.target);
  switch (agent.policy) {
    case Policy::ClassifierLookahead: {
      const auto moves = canonical_moves(pos, agent.bound);
      for (const auto& m : moves)
        if (goal.granted_by(classify(apply_move(pos, m), {agent.bound}).verdict, me)) return m;
      return moves.front();
    }
    case Policy::MinimaxOracle: {
      const auto moves =
          pos.domain().is_finite() ? all_free_moves(pos) : canonical_moves(pos, agent.bound);
      for (const auto& m : moves)
        if (goal.granted_by(ctx.oracle(apply_move(pos, m)), me)) return m;
      return moves.front();
    }
    case Policy::UniformRandom: {
      const auto moves = canonical_moves(pos, agent.bound);
      std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
      return moves[pick(ctx.rng())];
    }
    case Policy::GreedyParity: {
      const auto moves = canonical_moves(pos, agent.bound);
      for (const auto& m : moves)
        if (apply_move(pos, m).parity() == agent.target) return m;
      return moves.front();
    }
  }
  throw std::logic_error("unknown policy");
}

Playout play_out(const Position& start, const Agent& black, const Agent& white,
                 std::uint64_t seed) {
  AgentContext ctx(seed);
  return play_out(start, black, white, seed, ctx);
}

Playout play_out(const Position& start, const Agent& black, const Agent& white,
                 std::uint64_t seed, AgentContext& ctx) {
  ctx.reseed(seed);
  auto source = [&](const Agent& a) {
    return MoveSource{a.name(), [&](const Position& p) { return choose_move(a, p, ctx); }};
  };
  return play_out(start, source(black), source(white));
}

Playout play_out(const Position& start, const MoveSource& black, const MoveSource& white) {
  Playout out;
  Position pos = start;
  while (!pos.is_terminal()) {
    const bool black_moves = *pos.mover() == Player::Black;
    const MoveSource& src = black_moves ? black : white;
    Address m = src.pick(pos);
    if (!is_valid_address(pos.domain(), m) || !pos.is_free(m))
      throw ProtocolViolation((black_moves ? "black agent " : "white agent ") + src.name +
                              " played illegal move " + render_address(m));
    out.moves.push_back(m);
    pos = apply_move(pos, m);
  }
  out.final_parity = pos.parity();
  return out;
}

std::string playout_record(const Position& start, std::uint64_t seed, const Agent& black,
                           const Agent& white, const std::string& objective,
                           const Playout& result) {
  nlohmann::ordered_json j;
  j["domain"] = render_domain(start.domain());
  j["start"] = position_to_json(start);
  j["seed"] = seed;
  j["black"] = black.name();
  j["white"] = white.name();
  j["objective"] = objective;
  j["result"] = std::string(to_string(result.final_parity));
  auto moves = nlohmann::ordered_json::array();
  for (const auto& m : result.moves) moves.push_back(render_address(m));
  j["moves"] = std::move(moves);
  return j.dump();
}

}  // namespace tpg
