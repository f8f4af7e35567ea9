#include "tpg/http_api.hpp"

#include "httplib.h"
#include "tpg/errors.hpp"

namespace tpg {

namespace {

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json; charset=utf-8");
}

void reply_error(httplib::Response& res, int status, std::string_view code, std::string message) {
  reply(res, status, {{"error", {{"code", code}, {"message", std::move(message)}}}});
}

template <class F>
void guarded(httplib::Response& res, F&& body) {
  try {
    body();
  } catch (const IllegalMove& e) {
    reply_error(res, 400, "illegal-move", e.what());
  } catch (const InvalidInput& e) {
    reply_error(res, 400, "invalid-input", e.what());
  } catch (const LimitExceeded& e) {
    reply_error(res, 400, "limit-exceeded", e.what());
  } catch (const UnknownSession& e) {
    reply_error(res, 404, "unknown-session", e.what());
  } catch (const OutOfTurn& e) {
    reply_error(res, 409, "out-of-turn", e.what());
  } catch (const std::exception& e) {
    reply_error(res, 500, "internal", e.what());
  }
}

nlohmann::json parse_body(const httplib::Request& req) {
  auto j = nlohmann::json::parse(req.body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw InvalidInput("body must be a JSON object");
  return j;
}

}  // namespace

void install_routes(httplib::Server& server, SessionManager& sessions) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Headers", "Content-Type"},
                              {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"}});
  server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Post("/sessions", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { reply(res, 201, sessions.create(parse_body(req))); });
  });
  server.Get(R"(/sessions/([0-9a-zA-Z_-]+))",
             [&](const httplib::Request& req, httplib::Response& res) {
               guarded(res, [&] { reply(res, 200, sessions.get(req.matches[1])); });
             });
  server.Post(R"(/sessions/([0-9a-zA-Z_-]+)/moves)",
              [&](const httplib::Request& req, httplib::Response& res) {
                guarded(res, [&] {
                  reply(res, 200, sessions.move(req.matches[1], parse_body(req)));
                });
              });
  server.Post("/analyze", [&](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] {
      auto body = parse_body(req);
      if (!body.contains("position")) throw InvalidInput("request needs a position");
      const int bound = body.value("bound", kDefaultBound);
      bool normalized = false;
      Position pos = position_from_request(body.at("position"), &normalized);
      Json out = analyze_position(pos, bound);
      if (normalized) out["notice"] = "domain normalized to " + render_domain(pos.domain());
      reply(res, 200, out);
    });
  });
}

}  // namespace tpg
