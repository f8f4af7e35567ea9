#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "tpg/domain.hpp"

namespace tpg {

// Position document:
//   {"domain": "f1,z", "occupied": [{"block": 1, "offset": 0}, ...],
//    "parity": "even", "remaining": 4}
// Integer offsets are JSON integers, dense offsets are "p/q" strings.
nlohmann::ordered_json address_to_json(const Address& a);
Address address_from_json(const nlohmann::json& j);

nlohmann::ordered_json position_to_json(const Position& pos);
Position position_from_json(const nlohmann::json& j);

std::string serialize_position(const Position& pos);
Position deserialize_position(std::string_view text);

}  // namespace tpg
