// tpg: classify, solve and play the transposition-parity game.

#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"
#include "tpg/errors.hpp"
#include "tpg/http_api.hpp"
#include "tpg/service.hpp"
#include "tpg/verify.hpp"

namespace {

struct PositionArgs {
  std::string domain;
  std::string occupied;
  long long turns = 0;
  std::string parity = "even";
  int bound = tpg::kDefaultBound;
  bool json = false;
};

void add_position_options(CLI::App* cmd, PositionArgs& a) {
  cmd->add_option("--domain", a.domain, "domain, e.g. finite:6, w+,w+, f1,z, dense(cc)")->required();
  cmd->add_option("--occupied", a.occupied, "comma-separated addresses, 0-based: 2,4 or 1:0,1:1/2");
  cmd->add_option("--turns", a.turns, "turns remaining")->required();
  cmd->add_option("--parity", a.parity, "current parity")->check(CLI::IsMember({"even", "odd"}));
  cmd->add_option("--bound", a.bound, "canonical move bound")->check(CLI::PositiveNumber);
  cmd->add_flag("--json", a.json, "print the analysis document");
}

tpg::Position make_position(const PositionArgs& a) {
  nlohmann::json req = {{"domain", a.domain}, {"occupied", a.occupied},
                        {"parity", a.parity}, {"remaining", a.turns}};
  bool normalized = false;
  auto pos = tpg::position_from_request(req, &normalized);
  if (normalized) std::cerr << "notice: domain normalized to " << render_domain(pos.domain()) << "\n";
  return pos;
}

void print_fields(const tpg::Json& j, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.value().is_object()) {
      std::cout << indent << it.key() << ":\n";
      print_fields(it.value(), indent + "  ");
    } else if (it.value().is_string()) {
      std::cout << indent << it.key() << ": " << it.value().get<std::string>() << "\n";
    } else {
      std::cout << indent << it.key() << ": " << it.value().dump() << "\n";
    }
  }
}

void emit(const tpg::Json& j, bool json) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    print_fields(j);
}

void show(const tpg::Json& j) {
  const auto& st = j.at("state");
  if (st.contains("position")) {
    std::cout << "position " << st["position"].dump() << "\n";
    std::cout << "targets  black " << st["targets"]["black"].get<std::string>() << ", white "
              << st["targets"]["white"].get<std::string>() << "\n";
  } else if (st.contains("clumps")) {
    std::cout << "clumps   " << st["clumps"].get<std::string>() << "\n";
  } else {
    std::cout << "pieces   " << st["pieces"].get<std::string>() << "\n";
  }
  const auto& an = j.at("analysis");
  if (an.contains("verdict"))
    std::cout << "verdict  " << an["verdict"].get<std::string>() << " ("
              << an["case"].get<std::string>() << ")\n";
  if (an.contains("sequence"))
    std::cout << "sequence " << an["sequence"].get<std::string>() << "  delta "
              << an["delta"].dump() << "\n";
  else if (an.contains("delta"))
    std::cout << "sequence " << an["delta"]["sequence"].get<std::string>() << "  delta "
              << an["delta"]["delta"].dump() << "\n";
  if (st["over"].get<bool>())
    std::cout << "game over, " << st["winner"].get<std::string>() << " wins\n";
  else
    std::cout << st["to_move"].get<std::string>() << " to move; moves " << an["moves"].dump()
              << "\n";
}

int play(const std::string& variant, const PositionArgs& pos, const std::string& clumps,
         const std::string& pieces, const std::string& human, const std::string& target) {
  tpg::SessionManager sessions;
  nlohmann::json config;
  if (variant == "line") {
    config = {{"domain", pos.domain}, {"occupied", pos.occupied}, {"parity", pos.parity},
              {"remaining", pos.turns}, {"bound", pos.bound}};
    if (!target.empty()) config["black_target"] = target;
  } else if (variant == "pennies") {
    config = {{"clumps", clumps}};
  } else {
    config = {{"pieces", pieces}};
  }
  if (!human.empty()) config["human"] = human;
  auto j = sessions.create({{"variant", variant}, {"config", config}});
  const std::string id = j["id"].get<std::string>();
  if (!j["engine_move"].is_null())
    std::cout << "engine plays " << j["engine_move"].get<std::string>() << "\n";
  show(j);
  std::string line;
  while (!j["state"]["over"].get<bool>()) {
    std::cout << "move> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line == "quit" || line == "q") break;
    if (line.empty()) continue;
    try {
      j = sessions.move(id, {{"move", line}});
      if (!j["engine_move"].is_null())
        std::cout << "engine plays " << j["engine_move"].get<std::string>() << "\n";
      show(j);
    } catch (const tpg::Error& e) {
      std::cout << "rejected: " << e.what() << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"transposition-parity game engine"};
  app.require_subcommand(1);

  PositionArgs cls, sol;
  auto* classify_cmd = app.add_subcommand("classify", "winner and the case that decides it");
  add_position_options(classify_cmd, cls);
  auto* solve_cmd = app.add_subcommand("solve", "winner by exhaustive game-tree search");
  add_position_options(solve_cmd, sol);

  std::string seq;
  bool delta_json = false;
  auto* delta_cmd = app.add_subcommand("delta", "delta, mover, winner and best move of a sequence");
  delta_cmd->add_option("--seq", seq, "comma-separated positive integers")->required();
  delta_cmd->add_flag("--json", delta_json, "print the analysis document");

  std::vector<std::string> suites;
  tpg::VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "cross-check the engine against brute force");
  std::vector<std::string> suite_choices = tpg::suite_names();
  suite_choices.push_back("all");
  verify_cmd->add_option("--suite", suites, "suite(s) to run")
      ->required()
      ->check(CLI::IsMember(suite_choices));
  verify_cmd->add_option("--max-d", vopt.max_d, "largest finite domain in the sweep");
  verify_cmd->add_option("--bound", vopt.bound, "canonical move bound")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--positions", vopt.symbolic_positions, "symbolic self-play positions");
  verify_cmd->add_option("--seed", vopt.seed, "corpus seed");

  std::string variant = "line", clumps, pieces, human, target;
  PositionArgs pl;
  auto* play_cmd = app.add_subcommand("play", "play against the engine in the terminal");
  play_cmd->add_option("--variant", variant)->check(CLI::IsMember({"line", "pennies", "pieces"}));
  play_cmd->add_option("--domain", pl.domain);
  play_cmd->add_option("--occupied", pl.occupied);
  play_cmd->add_option("--turns", pl.turns);
  play_cmd->add_option("--parity", pl.parity)->check(CLI::IsMember({"even", "odd"}));
  play_cmd->add_option("--bound", pl.bound)->check(CLI::PositiveNumber);
  play_cmd->add_option("--clumps", clumps, "pennies, e.g. 2|3|1");
  play_cmd->add_option("--pieces", pieces, "pieces, e.g. wbw");
  play_cmd->add_option("--human", human)->check(CLI::IsMember({"black", "white"}));
  play_cmd->add_option("--black-target", target, "parity Black plays for")
      ->check(CLI::IsMember({"even", "odd"}));

  int port = 8080;
  std::string host = "127.0.0.1", log_dir;
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP session API");
  serve_cmd->add_option("--port", port)->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--host", host);
  serve_cmd->add_option("--log-dir", log_dir, "append session histories here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*classify_cmd) {
      emit(tpg::analyze_position(make_position(cls), cls.bound), cls.json);
    } else if (*solve_cmd) {
      emit(tpg::solve_position(make_position(sol), sol.bound), sol.json);
    } else if (*delta_cmd) {
      emit(tpg::analyze_sequence(tpg::BlockSequence::parse(seq)), delta_json);
    } else if (*verify_cmd) {
      std::vector<std::string> run;
      for (const auto& s : suites) {
        if (s == "all")
          run.insert(run.end(), tpg::suite_names().begin(), tpg::suite_names().end());
        else
          run.push_back(s);
      }
      bool ok = true;
      for (const auto& s : run) {
        auto report = tpg::run_suite(s, vopt);
        std::cout << tpg::render_report(report);
        ok = ok && report.passed();
      }
      return ok ? 0 : 1;
    } else if (*play_cmd) {
      return play(variant, pl, clumps, pieces, human, target);
    } else if (*serve_cmd) {
      std::optional<std::filesystem::path> dir;
      if (!log_dir.empty()) dir = log_dir;
      tpg::SessionManager sessions(dir);
      httplib::Server server;
      tpg::install_routes(server, sessions);
      std::cerr << "listening on " << host << ":" << port << "\n";
      if (!server.listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
        return 2;
      }
    }
  } catch (const tpg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
