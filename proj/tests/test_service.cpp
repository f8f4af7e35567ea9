#include <atomic>
#include <filesystem>
#include <fstream>
#include <thread>
#include <vector>

#include "doctest.h"
#include "httplib.h"
#include "tpg/http_api.hpp"
#include "tpg/serialization.hpp"
#include "tpg/service.hpp"

using namespace tpg;
using nlohmann::json;

namespace {

json line_config(const char* domain, const char* occupied, int remaining) {
  return {{"variant", "number-line"},
          {"config", {{"domain", domain}, {"occupied", occupied}, {"remaining", remaining}}}};
}

}  // namespace

TEST_CASE("pieces session: human removes the black piece") {
  SessionManager sm;
  auto created = sm.create({{"variant", "pieces"}, {"config", {{"pieces", "wbw"}}}});
  CHECK(created["state"]["human"] == "black");
  CHECK(created["engine_move"].is_null());
  CHECK(created["analysis"]["sequence"] == "2,2");
  const std::string id = created["id"];
  auto after = sm.move(id, {{"move", "remove-black 1"}});
  CHECK_FALSE(after["engine_move"].is_null());
  CHECK(after["state"]["over"] == true);
  // From ww, White merges to b or removes a w; perfect play leaves w.
  CHECK(after["state"]["pieces"] == "w");
  CHECK(after["state"]["winner"] == "white");
  auto got = sm.get(id);
  REQUIRE(got["history"].size() == 2);
  CHECK(got["history"][0]["move"] == "remove-black 1");
  CHECK(got["history"][1]["by"] == "engine");
}

TEST_CASE("number-line session analysis follows the state") {
  SessionManager sm;
  auto created = sm.create(line_config("finite:6", "2", 4));
  CHECK(created["analysis"]["pivots"].size() == 1);
  CHECK(created["analysis"]["delta"]["sequence"] == "2,3");
  const std::string id = created["id"];
  const std::string human = created["state"]["to_move"];
  CHECK(created["state"]["human"] == human);

  // The human's placement next to the pivot absorbs it.
  auto mid = analyze_position(
      apply_move(finite_position(6, {3}, 4), Address{0, Rational(3)}));
  CHECK(mid["pivots"].empty());

  auto after = sm.move(id, {{"move", "3"}});
  auto pos = position_from_json(after["state"]["position"]);
  CHECK(pos.remaining() == 2);
  std::size_t pivots = 0;
  for (const auto& b : s_blocks(pos)) pivots += b.is_pivot;
  CHECK(after["analysis"]["pivots"].size() == pivots);

  SessionManager last;
  auto one = last.create(line_config("finite:6", "2", 1));
  auto end = last.move(one["id"], {{"move", "3"}});
  CHECK(end["analysis"]["pivots"].empty());
  CHECK(end["state"]["over"] == true);
}

TEST_CASE("session errors") {
  SessionManager sm;
  auto created = sm.create(line_config("finite:6", "2", 4));
  const std::string id = created["id"];
  CHECK_THROWS_AS(sm.move(id, {{"move", "2"}}), IllegalMove);
  CHECK_THROWS_AS(sm.move(id, {{"move", "9"}}), IllegalMove);
  CHECK_THROWS_AS(sm.move("nope", {{"move", "1"}}), UnknownSession);
  CHECK_THROWS_AS(sm.get("nope"), UnknownSession);
  const std::string engine = created["state"]["engine"];
  CHECK_THROWS_AS(sm.move(id, {{"move", "0"}, {"side", engine}}), OutOfTurn);
  CHECK_THROWS_AS(sm.create({{"variant", "chess"}}), InvalidInput);
  CHECK_THROWS_AS(sm.create({{"variant", "pennies"}, {"config", {{"clumps", "2"}}}}), InvalidInput);

  auto done = sm.create({{"variant", "pieces"}, {"config", {{"pieces", "ww"}, {"human", "white"}}}});
  auto over = sm.move(done["id"], {{"move", "merge-whites 0"}});
  CHECK(over["state"]["over"] == true);
  CHECK_THROWS_AS(sm.move(done["id"], {{"move", "remove-left"}}), OutOfTurn);

  auto engine_first =
      sm.create({{"variant", "pennies"}, {"config", {{"clumps", "2|3"}, {"human", "black"}}}});
  CHECK_FALSE(engine_first["engine_move"].is_null());
  CHECK(engine_first["state"]["to_move"] == "black");
}

TEST_CASE("replay reproduces the session") {
  SessionManager sm;
  auto created = sm.create({{"variant", "pennies"}, {"config", {{"clumps", "3|2|4"}}}});
  const std::string id = created["id"];
  while (!sm.get(id)["state"]["over"].get<bool>()) {
    auto moves = sm.get(id)["analysis"]["moves"];
    sm.move(id, {{"move", moves.back()}});
    CHECK(sm.replay(id) == sm.get(id));
  }

  auto line = sm.create(line_config("f2,z", "", 5));
  const std::string lid = line["id"];
  for (int i = 0; i < 2 && !sm.get(lid)["state"]["over"].get<bool>(); ++i) {
    auto moves = sm.get(lid)["analysis"]["moves"];
    sm.move(lid, {{"move", moves.front()}});
  }
  CHECK(sm.replay(lid) == sm.get(lid));
}

TEST_CASE("distinct sessions run concurrently") {
  SessionManager sm;
  std::vector<std::string> ids;
  for (int i = 0; i < 8; ++i)
    ids.push_back(sm.create({{"variant", "pieces"}, {"config", {{"pieces", "wwbwbww"}}}})["id"]);
  std::atomic<int> errors{0};
  std::vector<std::thread> threads;
  for (const auto& id : ids) {
    threads.emplace_back([&sm, &errors, id] {
      try {
        while (!sm.get(id)["state"]["over"].get<bool>())
          sm.move(id, {{"move", sm.get(id)["analysis"]["moves"][0]}});
      } catch (...) {
        ++errors;
      }
    });
  }
  // Hammer one session from several threads: every move is serialized.
  const std::string shared = sm.create(line_config("finite:10", "", 9))["id"];
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&sm, shared] {
      for (int k = 0; k < 10; ++k) {
        try {
          sm.move(shared, {{"move", std::to_string(k)}});
        } catch (const Error&) {
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  CHECK(errors == 0);
  CHECK(sm.size() == 9);
  auto s = sm.get(shared);
  auto pos = position_from_json(s["state"]["position"]);
  CHECK(pos.occupied().size() == s["history"].size());
  CHECK(sm.replay(shared) == s);
}

TEST_CASE("session logs are append-only lines") {
  auto dir = std::filesystem::temp_directory_path() / "tpg-test-logs";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  SessionManager sm(dir);
  auto created = sm.create({{"variant", "pieces"}, {"config", {{"pieces", "wbw"}}}});
  const std::string id = created["id"];
  sm.move(id, {{"move", "remove-left"}});
  std::ifstream in(dir / (id + ".jsonl"));
  std::vector<json> events;
  for (std::string line; std::getline(in, line);) events.push_back(json::parse(line));
  REQUIRE(events.size() == 3);
  CHECK(events[0]["event"] == "create");
  CHECK(events[1]["move"] == "remove-left");
  CHECK(events[2]["by"] == "engine");
  std::filesystem::remove_all(dir);
}

TEST_CASE("request parsing") {
  CHECK(address_from_request(json("1:2")) == Address{1, Rational(2)});
  CHECK(address_from_request(json(4)) == Address{0, Rational(4)});
  CHECK(address_from_request(json{{"block", 0}, {"offset", "1/2"}}) ==
        Address{0, Rational(1, 2)});
  bool normalized = false;
  auto pos = position_from_request(
      {{"domain", "w-,w+"}, {"occupied", json::array({"3", "-1"})}, {"remaining", 3}},
      &normalized);
  CHECK(normalized);
  CHECK(pos.occupied().front().offset == Rational(-1));
  CHECK_THROWS_AS(position_from_request({{"domain", "z"}}), InvalidInput);
  CHECK(parse_variant("line") == Variant::NumberLine);
}

TEST_CASE("http api") {
  SessionManager sm;
  httplib::Server server;
  install_routes(server, sm);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread runner([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  httplib::Client cli("127.0.0.1", port);

  auto post = [&](const std::string& path, const json& body) {
    return cli.Post(path, body.dump(), "application/json");
  };

  auto created = post("/sessions", line_config("finite:6", "2", 4));
  REQUIRE(created);
  CHECK(created->status == 201);
  auto cj = json::parse(created->body);
  const std::string id = cj["id"];
  CHECK(created->get_header_value("Access-Control-Allow-Origin") == "*");

  auto got = cli.Get("/sessions/" + id);
  REQUIRE(got);
  CHECK(got->status == 200);
  CHECK(json::parse(got->body)["state"] == cj["state"]);

  auto bad = post("/sessions/" + id + "/moves", {{"move", "2"}});
  CHECK(bad->status == 400);
  CHECK(json::parse(bad->body)["error"]["code"] == "illegal-move");

  auto turn = post("/sessions/" + id + "/moves", {{"move", "0"}, {"side", cj["state"]["engine"]}});
  CHECK(turn->status == 409);
  CHECK(json::parse(turn->body)["error"]["code"] == "out-of-turn");

  auto missing = post("/sessions/ffff/moves", {{"move", "0"}});
  CHECK(missing->status == 404);

  auto ok = post("/sessions/" + id + "/moves", {{"move", "3"}});
  CHECK(ok->status == 200);
  CHECK(json::parse(ok->body).contains("engine_move"));

  auto garbage = cli.Post("/sessions", "{", "application/json");
  CHECK(garbage->status == 400);

  // The API analysis and the CLI classify share one code path.
  json position = {{"domain", "w-,w+"}, {"occupied", "0,2"}, {"remaining", 5}};
  auto an = post("/analyze", {{"position", position}});
  REQUIRE(an->status == 200);
  auto aj = json::parse(an->body);
  CHECK(aj.contains("notice"));
  aj.erase("notice");
  CHECK(aj == json(analyze_position(position_from_request(position))));
  CHECK(aj["case"] == "Z_MANYPIV");

  server.stop();
  runner.join();
}
