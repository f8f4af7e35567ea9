#pragma once

#include "tpg/service.hpp"

namespace httplib {
class Server;
}

namespace tpg {

// Installs the session routes on `server`:
//   POST /sessions             {variant, config}  -> {id, variant, state, engine_move, analysis}
//   GET  /sessions/{id}                           -> {id, variant, state, history, analysis}
//   POST /sessions/{id}/moves  {move, side?}      -> {state, engine_move, analysis}
//   POST /analyze              {position, bound?} -> analysis
// Errors come back as {"error": {"code", "message"}} with 400, 404 or 409.
void install_routes(httplib::Server& server, SessionManager& sessions);

}  // namespace tpg
