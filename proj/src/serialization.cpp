#include "tpg/serialization.hpp"

#include "tpg/errors.hpp"

namespace tpg {

nlohmann::ordered_json address_to_json(const Address& a) {
  nlohmann::ordered_json j;
  j["block"] = a.block;
  if (a.offset.is_integer())
    j["offset"] = a.offset.num();
  else
    j["offset"] = a.offset.str();
  return j;
}

Address address_from_json(const nlohmann::json& j) {
  try {
    Address a;
    a.block = j.at("block").get<std::size_t>();
    const auto& off = j.at("offset");
    if (off.is_number_integer())
      a.offset = Rational(off.get<std::int64_t>());
    else
      a.offset = Rational::parse(off.get<std::string>());
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad address object: ") + e.what());
  }
}

nlohmann::ordered_json position_to_json(const Position& pos) {
  nlohmann::ordered_json j;
  j["domain"] = render_domain(pos.domain());
  auto occ = nlohmann::ordered_json::array();
  for (const auto& a : pos.occupied()) occ.push_back(address_to_json(a));
  j["occupied"] = std::move(occ);
  j["parity"] = std::string(to_string(pos.parity()));
  j["remaining"] = pos.remaining();
  return j;
}

Position position_from_json(const nlohmann::json& j) {
  try {
    auto domain = parse_domain(j.at("domain").get<std::string>());
    std::vector<Address> occ;
    for (const auto& a : j.at("occupied")) occ.push_back(address_from_json(a));
    Parity parity = j.contains("parity") ? parse_parity(j.at("parity").get<std::string>())
                                         : Parity::Even;
    return Position(std::move(domain), std::move(occ), parity,
                    j.at("remaining").get<std::int64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad position document: ") + e.what());
  }
}

std::string serialize_position(const Position& pos) { return position_to_json(pos).dump(); }

Position deserialize_position(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InvalidInput("position document is not valid JSON");
  return position_from_json(j);
}

}  // namespace tpg
