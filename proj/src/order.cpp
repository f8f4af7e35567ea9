#include "tpg/order.hpp"

#include <string>

namespace tpg {

Parity parse_parity(std::string_view text) {
  if (text == "even") return Parity::Even;
  if (text == "odd") return Parity::Odd;
  throw InvalidInput("parity must be 'even' or 'odd', got '" + std::string(text) + "'");
}

}  // namespace tpg
