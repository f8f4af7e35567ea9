#include "tpg/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "tpg/classifier.hpp"
#include "tpg/errors.hpp"
#include "tpg/oracle.hpp"
#include "tpg/strategy.hpp"

namespace tpg {

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

std::string describe(const Position& pos) {
  std::ostringstream out;
  out << render_domain(pos.domain()) << " occupied {";
  for (std::size_t i = 0; i < pos.occupied().size(); ++i)
    out << (i ? " " : "") << render_address(pos.occupied()[i]);
  out << "} r=" << pos.remaining() << " parity=" << to_string(pos.parity());
  return out.str();
}

Position from_mask(int d, std::uint32_t mask, Parity parity, int remaining) {
  std::vector<Address> occ;
  for (int i = 0; i < d; ++i)
    if (mask >> i & 1U) occ.push_back({0, Rational(i)});
  return Position(finite_domain(d), std::move(occ), parity, remaining);
}

// Pivots read straight off the bitmask: odd runs of ones with a zero on each side.
int mask_pivots(int d, std::uint32_t mask) {
  int pivots = 0;
  int i = 0;
  while (i < d) {
    if (!(mask >> i & 1U)) {
      ++i;
      continue;
    }
    int j = i;
    while (j < d && (mask >> j & 1U)) ++j;
    if ((j - i) % 2 == 1 && i > 0 && j < d) ++pivots;
    i = j;
  }
  return pivots;
}

void compositions(int total, std::vector<int>& prefix, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(prefix);
    return;
  }
  for (int first = 1; first <= total; ++first) {
    prefix.push_back(first);
    compositions(total - first, prefix, out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> all_sequences(int min_sum, int max_sum) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  for (int s = min_sum; s <= max_sum; ++s) compositions(s, prefix, out);
  return out;
}

std::string seq_str(const std::vector<int>& v) { return BlockSequence(v).str(); }

std::multiset<std::vector<int>> delta_successors(const BlockSequence& seq) {
  std::multiset<std::vector<int>> out;
  for (const auto& [m, next] : legal_delta_moves(seq)) out.insert(next.terms());
  return out;
}

template <class F>
SuiteReport timed(std::string name, F&& body) {
  SuiteReport report;
  report.suite = std::move(name);
  auto t0 = std::chrono::steady_clock::now();
  body(report);
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

CheckResult named(std::string name) {
  CheckResult c;
  c.name = std::move(name);
  return c;
}

void require_at_least(CheckResult& c, std::int64_t minimum) {
  if (c.cases < minimum)
    c.fail("only " + std::to_string(c.cases) + " cases, need " + std::to_string(minimum));
}

std::string verdict_name(const Verdict& v) { return v.str(); }

}  // namespace

void CheckResult::fail(std::string what) {
  passed = false;
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(what));
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Player sequence_minimax(const BlockSequence& seq, std::map<std::vector<int>, Player>& memo) {
  if (seq.is_terminal()) return seq.size() == 1 ? Player::White : Player::Black;
  auto it = memo.find(seq.terms());
  if (it != memo.end()) return it->second;
  const Player me = seq.mover();
  Player best = opponent(me);
  for (const auto& [m, next] : legal_delta_moves(seq)) {
    if (sequence_minimax(next, memo) == me) {
      best = me;
      break;
    }
  }
  memo[seq.terms()] = best;
  return best;
}

Player pennies_minimax(const PenniesState& s, std::map<std::vector<int>, Player>& memo) {
  if (s.is_terminal()) return s.winner();
  auto it = memo.find(s.clumps);
  if (it != memo.end()) return it->second;
  const Player me = s.mover();
  Player best = opponent(me);
  for (const auto& succ : pennies_moves(s)) {
    if (pennies_minimax(succ.state, memo) == me) {
      best = me;
      break;
    }
  }
  memo[s.clumps] = best;
  return best;
}

Player pieces_minimax(const PiecesState& s, std::map<std::string, Player>& memo) {
  if (s.is_terminal()) return s.winner();
  const std::string key = s.str();
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const Player me = s.mover();
  Player best = opponent(me);
  for (const auto& succ : pieces_moves(s)) {
    if (pieces_minimax(succ.state, memo) == me) {
      best = me;
      break;
    }
  }
  memo[key] = best;
  return best;
}

std::vector<Position> symbolic_corpus(int count, std::uint64_t seed, int max_remaining) {
  static const std::vector<BlockKind> kinds = {
      BlockKind::finite(1),         BlockKind::finite(2),        BlockKind::finite(3),
      BlockKind::finite(5),         BlockKind::omega_up(),       BlockKind::omega_down(),
      BlockKind::omega_bi(),        BlockKind::dense(false, false), BlockKind::dense(true, false),
      BlockKind::dense(false, true), BlockKind::dense(true, true)};
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  std::vector<Position> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    std::vector<BlockKind> raw;
    const std::size_t blocks = 1 + pick(3);
    for (std::size_t i = 0; i < blocks; ++i) raw.push_back(kinds[pick(kinds.size())]);
    auto domain = normalize_domain(raw);
    if (domain.is_finite()) continue;
    Position pos(domain, {}, Parity::Even, 64);
    const std::size_t placed = pick(6);
    for (std::size_t i = 0; i < placed; ++i) {
      auto moves = canonical_moves(pos, 3);
      pos = apply_move(pos, moves[pick(moves.size())]);
    }
    const int remaining = 1 + static_cast<int>(pick(static_cast<std::size_t>(max_remaining)));
    out.emplace_back(domain, pos.occupied(), (rng() & 1U) ? Parity::Odd : Parity::Even,
                     remaining);
  }
  return out;
}

std::vector<Position> structured_corpus(int max_placed) {
  static const std::vector<BlockKind> kinds = {BlockKind::omega_up(),   BlockKind::omega_down(),
                                               BlockKind::omega_bi(),   BlockKind::finite(1),
                                               BlockKind::finite(2),    BlockKind::dense(false, false)};
  std::vector<Position> out;
  auto emit = [&](const std::vector<BlockKind>& raw) {
    auto domain = normalize_domain(raw);
    if (domain.is_finite()) return;
    const auto slots = canonical_moves(Position(domain, {}, Parity::Even, 64), 1);
    const int n = static_cast<int>(slots.size());
    if (n > 12) return;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) > max_placed) continue;
      std::vector<Address> occ;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1U) occ.push_back(slots[static_cast<std::size_t>(i)]);
      std::sort(occ.begin(), occ.end(),
                [&](const Address& a, const Address& b) { return compare(domain, a, b) < 0; });
      for (int rem : {3, 4, 5})
        for (Parity p : {Parity::Even, Parity::Odd}) out.emplace_back(domain, occ, p, rem);
    }
  };
  for (const auto& a : kinds)
    for (const auto& b : kinds) {
      emit({a, b});
      for (const auto& c : kinds) emit({a, b, c});
    }
  return out;
}

SuiteReport verify_finite_sweep(const VerifyOptions& o) {
  return timed("finite-sweep", [&](SuiteReport& r) {
    CheckResult agree = named("classify = solve_finite, d <= " + std::to_string(o.max_d));
    CheckResult exact = named("d = m+n: label FIN_EXACT, White controls");
    CheckResult nopiv = named("d > m+n+1, no pivot: label FIN_NOPIV, White controls");
    CheckResult onepiv = named("d > m+n+1, one pivot: label FIN_ONEPIV, mover controls");
    CheckResult manypiv = named("d > m+n+1, >= 2 pivots: label FIN_MANYPIV, Black controls");
    CheckResult deltacase = named("d = m+n+1: label FIN_DELTA");
    CheckResult second_last = named("Black's second-last turn: no pivot White, pivot Black");
    FiniteSolver solver;
    for (int d = 1; d <= o.max_d; ++d) {
      for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
        const int m = std::popcount(mask);
        const int pivots = mask_pivots(d, mask);
        for (int rem = 0; rem <= d - m; ++rem) {
          for (Parity p : {Parity::Even, Parity::Odd}) {
            Position pos = from_mask(d, mask, p, rem);
            auto c = classify(pos);
            Verdict truth = solver.solve(pos);
            ++agree.cases;
            if (!(c.verdict == truth))
              agree.fail(describe(pos) + ": classify " + c.verdict.str() + " (" +
                         std::string(to_string(c.label)) + "), oracle " + truth.str());
            if (rem < 3) continue;
            const int free = d - m;
            auto expect = [&](CheckResult& check, CaseLabel label, const Verdict& v) {
              ++check.cases;
              if (c.label != label || !(c.verdict == v))
                check.fail(describe(pos) + ": got " + c.verdict.str() + " " +
                           std::string(to_string(c.label)));
            };
            const Player mover = *pos.mover();
            if (free == rem) {
              expect(exact, CaseLabel::FIN_EXACT, Verdict::white_controls());
            } else if (free == rem + 1) {
              ++deltacase.cases;
              if (c.label != CaseLabel::FIN_DELTA) deltacase.fail(describe(pos));
            } else if (pivots == 0) {
              expect(nopiv, CaseLabel::FIN_NOPIV, Verdict::white_controls());
            } else if (pivots == 1) {
              expect(onepiv, CaseLabel::FIN_ONEPIV, Verdict::controlled_by(mover));
            } else {
              expect(manypiv, CaseLabel::FIN_MANYPIV, Verdict::black_controls());
            }
            if (rem == 3 && free >= rem + 2) {
              ++second_last.cases;
              Verdict want = pivots == 0 ? Verdict::white_controls() : Verdict::black_controls();
              if (!(truth == want)) second_last.fail(describe(pos) + ": oracle " + truth.str());
            }
          }
        }
      }
    }
    for (auto* c : {&exact, &nopiv, &onepiv, &manypiv, &deltacase, &second_last}) require_at_least(*c, 20);
    for (auto* c : {&agree, &exact, &nopiv, &onepiv, &manypiv, &deltacase, &second_last})
      r.checks.push_back(std::move(*c));
  });
}

SuiteReport verify_move_parity(const VerifyOptions& o) {
  return timed("move-parity", [&](SuiteReport& r) {
    CheckResult no_pivot = named("no pivot: every move adds l to the parity");
    CheckResult with_pivot = named("pivot: mover reaches both parity and parity + l");
    CheckResult removing = named("pivot: both controls while removing the pivot");
    for (int d = 1; d <= o.move_parity_max_d; ++d) {
      for (std::uint32_t mask = 0; mask + 1 < (1U << d); ++mask) {
        Position pos = from_mask(d, mask, Parity::Even, 1);
        const auto f = features(pos);
        if (f.pivot_count == 0) {
          for (const auto& mv : all_free_moves(pos)) {
            ++no_pivot.cases;
            Position next = apply_move(pos, mv);
            if (next.parity() != pos.parity() + parity_of(f.end_block_size))
              no_pivot.fail(describe(pos) + " play " + render_address(mv));
          }
          continue;
        }
        auto reach = [&](const std::vector<Address>& moves) {
          std::set<Parity> parity, shifted;
          for (const auto& mv : moves) {
            Position next = apply_move(pos, mv);
            parity.insert(next.parity());
            shifted.insert(next.parity() + parity_of(features(next).end_block_size));
          }
          return parity.size() == 2 && shifted.size() == 2;
        };
        ++with_pivot.cases;
        if (!reach(all_free_moves(pos))) with_pivot.fail(describe(pos));
        for (const auto& sb : s_blocks(pos)) {
          if (!sb.is_pivot) continue;
          ++removing.cases;
          const auto below = Address{0, Rational(sb.lowest.offset.num() - 1)};
          const auto above = Address{0, Rational(sb.highest.offset.num() + 1)};
          // Playing next to the pivot makes it even, or merges it into a neighbour.
          bool removed = true;
          for (const auto& mv : {below, above})
            if (features(apply_move(pos, mv)).pivot_count >= f.pivot_count) removed = false;
          if (!removed || !reach({below, above}))
            removing.fail(describe(pos) + " pivot at " + render_address(sb.lowest));
        }
      }
    }
    for (auto* c : {&no_pivot, &with_pivot, &removing}) r.checks.push_back(std::move(*c));
  });
}

SuiteReport verify_delta_sweep(const VerifyOptions& o) {
  return timed("delta-sweep", [&](SuiteReport& r) {
    CheckResult winner = named("delta_winner = minimax, sum <= " + std::to_string(o.max_sum));
    CheckResult step = named("every move changes |delta| by exactly 1");
    CheckResult parity = named("delta = sum (mod 2)");
    CheckResult best = named("delta_best_move keeps the mover winning");
    CheckResult fixed = named("delta(3,5,2,1,7,1,4,2,1) = -2, delta(2) = 0, delta(1,1) = 2");
    std::map<std::vector<int>, Player> memo;
    for (const auto& terms : all_sequences(2, o.max_sum)) {
      BlockSequence seq(terms);
      const int dl = delta(seq);
      ++winner.cases;
      if (delta_winner(seq) != sequence_minimax(seq, memo))
        winner.fail(seq.str() + ": delta says " + std::string(to_string(delta_winner(seq))));
      ++parity.cases;
      if ((dl - seq.sum()) % 2 != 0) parity.fail(seq.str());
      if (seq.is_terminal()) continue;
      for (const auto& [m, next] : legal_delta_moves(seq)) {
        ++step.cases;
        if (std::abs(std::abs(delta(next)) - std::abs(dl)) != 1)
          step.fail(seq.str() + " " + m.str() + " -> " + next.str());
      }
      if (delta_winner(seq) == seq.mover()) {
        ++best.cases;
        auto [m, next] = delta_best_move(seq);
        if (sequence_minimax(next, memo) != seq.mover()) best.fail(seq.str() + " " + m.str());
      }
    }
    const std::vector<std::pair<std::vector<int>, int>> pinned = {
        {{3, 5, 2, 1, 7, 1, 4, 2, 1}, -2}, {{2}, 0}, {{1, 1}, 2}};
    for (const auto& [terms, want] : pinned) {
      ++fixed.cases;
      int got = delta(BlockSequence(terms));
      if (got != want) fixed.fail(seq_str(terms) + ": got " + std::to_string(got));
    }
    for (auto* c : {&winner, &step, &parity, &best, &fixed}) r.checks.push_back(std::move(*c));
  });
}

SuiteReport verify_bisim(const VerifyOptions& o) {
  return timed("bisim", [&](SuiteReport& r) {
    CheckResult commute = named("every move commutes with a delta move, d <= " +
                        std::to_string(o.bisim_max_d));
    CheckResult terminal = named("last turn: (1,1) iff a pivot remains, (2) iff none");
    CheckResult outcome = named("delta_winner of the encoding = oracle controller");
    FiniteSolver solver;
    for (int d = 2; d <= o.bisim_max_d; ++d) {
      for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
        const int rem = d - std::popcount(mask) - 1;
        if (rem < 1) continue;
        for (Parity p : {Parity::Even, Parity::Odd}) {
          Position pos = from_mask(d, mask, p, rem);
          const BlockSequence seq = encode_blocks(pos);
          const Verdict truth = solver.solve(pos);
          ++outcome.cases;
          const bool black_wins = delta_winner(seq) == Player::Black;
          const bool ok = rem == 1 ? black_wins == (truth == Verdict::black_controls())
                                   : truth == Verdict::controlled_by(delta_winner(seq));
          if (!ok) outcome.fail(describe(pos) + " -> " + seq.str() + ", oracle " + truth.str());
          if (rem == 1) {
            ++terminal.cases;
            const bool pivot = features(pos).pivot_count > 0;
            const bool as_expected =
                pivot ? seq == BlockSequence({1, 1}) : seq == BlockSequence({2});
            if (!as_expected) terminal.fail(describe(pos) + " -> " + seq.str());
            continue;
          }
          const auto succ = delta_successors(seq);
          for (const auto& mv : all_free_moves(pos)) {
            ++commute.cases;
            BlockSequence next = encode_blocks(apply_move(pos, mv));
            if (!succ.contains(next.terms()))
              commute.fail(describe(pos) + " play " + render_address(mv) + ": " + seq.str() +
                           " -> " + next.str());
          }
        }
      }
    }
    for (auto* c : {&commute, &terminal, &outcome}) r.checks.push_back(std::move(*c));
  });
}

SuiteReport verify_children(const VerifyOptions& o) {
  return timed("children", [&](SuiteReport& r) {
    CheckResult pennies = named("pennies successors = delta successors, <= " +
                        std::to_string(o.max_pennies) + " pennies");
    CheckResult pennies_win = named("pennies minimax = delta_winner");
    CheckResult pieces = named("pieces moves map onto delta moves, <= " + std::to_string(o.max_pieces) +
                       " pieces");
    CheckResult pieces_win = named("pieces minimax = delta_winner");
    std::map<std::vector<int>, Player> pmemo;
    for (const auto& clumps : all_sequences(2, o.max_pennies)) {
      PenniesState s(clumps);
      const BlockSequence seq = pennies_to_sequence(s);
      ++pennies_win.cases;
      if (pennies_minimax(s, pmemo) != delta_winner(seq)) pennies_win.fail(s.str());
      if (s.is_terminal()) continue;
      ++pennies.cases;
      std::multiset<std::vector<int>> mine;
      for (const auto& succ : pennies_moves(s)) mine.insert(pennies_to_sequence(succ.state).terms());
      if (mine != delta_successors(seq)) pennies.fail(s.str());
    }
    std::map<std::string, Player> qmemo;
    for (int n = 1; n <= o.max_pieces; ++n) {
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<Piece> v;
        for (int i = 0; i < n; ++i) v.push_back((mask >> i & 1U) ? Piece::Black : Piece::White);
        PiecesState s(v);
        const BlockSequence seq = pieces_to_sequence(s);
        ++pieces_win.cases;
        if (pieces_minimax(s, qmemo) != delta_winner(seq)) pieces_win.fail(s.str());
        if (s.is_terminal()) continue;
        ++pieces.cases;
        const auto succ = delta_successors(seq);
        std::set<std::vector<int>> realized;
        for (const auto& m : pieces_moves(s)) {
          auto next = pieces_to_sequence(m.state).terms();
          if (!succ.contains(next)) pieces.fail(s.str() + " " + m.move.label() + " -> " + seq_str(next));
          realized.insert(next);
        }
        for (const auto& t : succ)
          if (!realized.contains(t)) pieces.fail(s.str() + ": delta successor " + seq_str(t) + " unrealized");
      }
    }
    for (auto* c : {&pennies, &pennies_win, &pieces, &pieces_win}) r.checks.push_back(std::move(*c));
  });
}

SuiteReport verify_examples(const VerifyOptions& o) {
  return timed("examples", [&](SuiteReport& r) {
    struct Golden {
      std::string name;
      std::string domain;
      std::vector<Address> occupied;
      // expected verdict for n remaining turns
      Verdict (*expect)(int n);
      std::string phrase;  // expected phrase, empty when not checked
    };
    const std::vector<Golden> golden = {
        {"golden: dense(cc) with 1/2 taken", "dense(cc)", {{0, Rational(1, 2)}},
         [](int) { return Verdict::black_controls(); }, ""},
        {"golden: w+,w+", "w+,w+", {}, [](int) { return Verdict::forced(Parity::Even); }, ""},
        {"golden: w-,w-", "w-,w-", {},
         [](int n) { return Verdict::forced(parity_of(n / 2)); }, ""},
        {"golden: w+,w-", "w+,w-", {}, [](int) { return Verdict::white_controls(); }, ""},
        {"golden: z", "z", {},
         [](int n) { return Verdict::controlled_by(opponent(mover_for(n))); }, "second-player"},
        {"golden: f1,z", "f1,z", {},
         [](int n) { return Verdict::controlled_by(mover_for(n)); }, "first-player"},
        {"golden: f2,z", "f2,z", {}, [](int) { return Verdict::black_controls(); }, ""},
    };
    CheckResult ex1 = named("golden: finite:d, n <= d: White controls");
    for (int n = 3; n <= 6; ++n) {
      for (int d = n; d <= n + 4; ++d) {
        Position pos(finite_domain(d), {}, Parity::Even, n);
        ++ex1.cases;
        auto c = classify(pos);
        if (!(c.verdict == Verdict::white_controls()))
          ex1.fail(describe(pos) + ": " + c.verdict.str());
      }
    }
    r.checks.push_back(std::move(ex1));
    for (const auto& g : golden) {
      CheckResult check = named(g.name);
      for (int n = 3; n <= 6; ++n) {
        Position pos(parse_domain(g.domain), g.occupied, Parity::Even, n);
        ++check.cases;
        auto c = classify(pos, {o.bound});
        const Verdict want = g.expect(n);
        if (!(c.verdict == want))
          check.fail(describe(pos) + ": got " + c.verdict.str() + ", want " + verdict_name(want));
        if (!g.phrase.empty() && render_phrase(c.verdict, n) != g.phrase)
          check.fail(describe(pos) + ": phrase " + render_phrase(c.verdict, n));
      }
      r.checks.push_back(std::move(check));
    }
  });
}

SuiteReport verify_selfplay(const VerifyOptions& o) {
  return timed("selfplay", [&](SuiteReport& r) {
    CheckResult finite = named("classifier vs minimax oracle, finite d <= " +
                       std::to_string(o.selfplay_max_d));
    CheckResult random = named("classifier vs uniform random, symbolic");
    CheckResult greedy = named("classifier vs greedy parity, symbolic");

    // (side, target) pairs the verdict promises to the named side.
    auto promises = [](const Verdict& v, std::uint64_t salt) {
      std::vector<std::pair<Player, Parity>> out;
      if (auto who = v.controller()) {
        out.push_back({*who, Parity::Even});
        out.push_back({*who, Parity::Odd});
        if (salt != 0) out.erase(out.begin() + static_cast<std::ptrdiff_t>(salt % 2));
      } else {
        out.push_back({Player::Black, v.forced_parity()});
        out.push_back({Player::White, v.forced_parity()});
        if (salt != 0) out.erase(out.begin() + static_cast<std::ptrdiff_t>(salt % 2));
      }
      return out;
    };
    auto run = [&](CheckResult& check, const Position& pos, Player side, Parity target,
                   Policy adversary, std::uint64_t seed, AgentContext& ctx) {
      Agent winner{Policy::ClassifierLookahead, target, o.bound};
      Agent other{adversary, flip(target), o.bound};
      const Agent& black = side == Player::Black ? winner : other;
      const Agent& white = side == Player::Black ? other : winner;
      ++check.cases;
      try {
        Playout out = play_out(pos, black, white, seed, ctx);
        if (out.final_parity != target)
          check.fail(playout_record(pos, seed, black, white,
                                    std::string(to_string(side)) + " wants " +
                                        std::string(to_string(target)),
                                    out));
      } catch (const Error& e) {
        check.fail(describe(pos) + ": " + e.what());
      }
    };

    AgentContext ctx(o.seed, o.bound);
    for (int d = 1; d <= o.selfplay_max_d; ++d) {
      for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
        const int m = std::popcount(mask);
        for (int rem = 1; rem <= d - m; ++rem) {
          for (Parity p : {Parity::Even, Parity::Odd}) {
            Position pos = from_mask(d, mask, p, rem);
            for (auto [side, target] : promises(classify(pos).verdict, 0))
              run(finite, pos, side, target, Policy::MinimaxOracle, 0, ctx);
          }
        }
      }
    }

    auto corpus = symbolic_corpus(o.symbolic_positions, o.seed, o.max_remaining);
    std::uint64_t seed = o.seed;
    for (const auto& pos : corpus) {
      const Verdict v = classify(pos, {o.bound}).verdict;
      ++seed;
      for (auto [side, target] : promises(v, seed)) {
        run(random, pos, side, target, Policy::UniformRandom, seed, ctx);
        run(greedy, pos, side, target, Policy::GreedyParity, seed, ctx);
      }
    }
    random.detail = greedy.detail = std::to_string(corpus.size()) + " positions";
    for (auto* c : {&finite, &random, &greedy}) r.checks.push_back(std::move(*c));
  });
}

SuiteReport verify_bound(const VerifyOptions& o) {
  return timed("bound", [&](SuiteReport& r) {
    CheckResult classify_b = named("classify identical for B = 2, 3, 4");
    CheckResult oracle_b = named("bounded oracle identical for B = 2, 3, 4");
    CheckResult agree = named("classify = bounded oracle");
    std::map<std::string, int> labels;
    auto corpus = symbolic_corpus(o.bound_positions, o.seed + 1, o.max_remaining);
    auto grid = structured_corpus(o.structured_placed);
    corpus.insert(corpus.end(), grid.begin(), grid.end());
    std::vector<BoundedSolver> solvers;
    for (int b : {2, 3, 4}) solvers.emplace_back(b);
    for (const auto& pos : corpus) {
      std::vector<Verdict> cv, ov;
      for (int b : {2, 3, 4}) cv.push_back(classify(pos, {b}).verdict);
      for (auto& s : solvers) ov.push_back(s.solve(pos));
      ++labels[std::string(to_string(classify(pos, {o.bound}).label))];
      ++classify_b.cases;
      ++oracle_b.cases;
      ++agree.cases;
      if (!(cv[0] == cv[1] && cv[1] == cv[2]))
        classify_b.fail(describe(pos) + ": " + cv[0].str() + "/" + cv[1].str() + "/" + cv[2].str());
      if (!(ov[0] == ov[1] && ov[1] == ov[2]))
        oracle_b.fail(describe(pos) + ": " + ov[0].str() + "/" + ov[1].str() + "/" + ov[2].str());
      if (!(cv[1] == ov[1]))
        agree.fail(describe(pos) + ": classify " + cv[1].str() + " (" +
                   std::string(to_string(classify(pos).label)) + "), oracle " + ov[1].str());
    }
    std::string hist;
    for (const auto& [k, v] : labels) hist += k + "=" + std::to_string(v) + " ";
    agree.detail = hist;
    for (auto* c : {&classify_b, &oracle_b, &agree}) r.checks.push_back(std::move(*c));
  });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"finite-sweep", "move-parity", "delta-sweep",
                                                 "bisim",        "children",    "examples",
                                                 "selfplay",     "bound"};
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  if (name == "finite-sweep") return verify_finite_sweep(options);
  if (name == "move-parity") return verify_move_parity(options);
  if (name == "delta-sweep") return verify_delta_sweep(options);
  if (name == "bisim") return verify_bisim(options);
  if (name == "children") return verify_children(options);
  if (name == "examples") return verify_examples(options);
  if (name == "selfplay") return verify_selfplay(options);
  if (name == "bound") return verify_bound(options);
  throw InvalidInput("unknown suite '" + std::string(name) + "'");
}

std::string render_report(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << report.suite << ": " << c.name << " (" << c.cases
        << " cases";
    if (c.failures) out << ", " << c.failures << " failures";
    out << ")";
    if (!c.detail.empty()) out << " " << c.detail;
    out << "\n";
    for (const auto& x : c.counterexamples) out << "    " << x << "\n";
  }
  return out.str();
}

}  // namespace tpg
