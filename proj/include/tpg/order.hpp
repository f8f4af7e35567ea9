#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string_view>

#include "tpg/errors.hpp"

namespace tpg {

// Parity of a permutation. Only the bit survives; counts are reduced at the
// boundary so composite formulas never see raw integers.
enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}
constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

constexpr Parity parity_of(std::integral auto n) {
  return (n % 2 != 0) ? Parity::Odd : Parity::Even;
}

constexpr Parity flip(Parity p) { return p + Parity::Odd; }

constexpr std::string_view to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// "even" / "odd"; throws InvalidInput otherwise.
Parity parse_parity(std::string_view text);

// Parity of the number of transpositions needed to sort `values`, computed as
// the inversion count mod 2. Values must be pairwise distinct.
template <std::totally_ordered T>
Parity inversion_parity(std::span<const T> values) {
  std::uint64_t inversions = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (values[j] == values[i]) throw InvalidInput("inversion_parity: duplicate element");
      if (values[j] > values[i]) ++inversions;
    }
  }
  return parity_of(inversions);
}

// Appending an element with `count_greater` larger predecessors flips the
// parity iff that count is odd.
constexpr Parity append_parity_delta(std::uint64_t count_greater) {
  return parity_of(count_greater);
}

}  // namespace tpg
