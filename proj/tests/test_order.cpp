#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "tpg/order.hpp"

using namespace tpg;

namespace {

Parity parity_of_values(const std::vector<int>& v) { return inversion_parity(std::span<const int>(v)); }

// Sorts by explicit transpositions (selection sort) and counts them.
Parity transposition_count_parity(std::vector<int> v) {
  int swaps = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    auto lo = std::min_element(v.begin() + static_cast<long>(i), v.end());
    if (lo != v.begin() + static_cast<long>(i)) {
      std::iter_swap(lo, v.begin() + static_cast<long>(i));
      ++swaps;
    }
  }
  return parity_of(swaps);
}

std::vector<int> random_sample(std::mt19937& rng, int n) {
  std::vector<int> pool(40);
  for (int i = 0; i < 40; ++i) pool[static_cast<std::size_t>(i)] = i * 3 - 50;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(n));
  return pool;
}

}  // namespace

TEST_CASE("inversion parity of small samples") {
  CHECK(parity_of_values({1, 2, 3}) == Parity::Even);
  CHECK(parity_of_values({2, 1}) == Parity::Odd);
  CHECK(parity_of_values({}) == Parity::Even);
}

TEST_CASE("inversion parity of 3,5,2,1,7 is frozen from a pair count") {
  const std::vector<int> v{3, 5, 2, 1, 7};
  int pairs = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) pairs += v[i] > v[j];
  CHECK(pairs == 5);
  CHECK(parity_of_values(v) == Parity::Odd);
  CHECK(transposition_count_parity(v) == Parity::Odd);
}

TEST_CASE("duplicates are rejected") {
  CHECK_THROWS_AS(parity_of_values({1, 2, 1}), InvalidInput);
}

TEST_CASE("append delta") {
  CHECK(append_parity_delta(0) == Parity::Even);
  CHECK(append_parity_delta(1) == Parity::Odd);
  CHECK(append_parity_delta(4) == Parity::Even);
}

TEST_CASE("parity arithmetic and text") {
  CHECK(Parity::Odd + Parity::Odd == Parity::Even);
  CHECK(flip(Parity::Even) == Parity::Odd);
  CHECK(parse_parity("odd") == Parity::Odd);
  CHECK(to_string(Parity::Even) == "even");
  CHECK_THROWS_AS(parse_parity("1"), InvalidInput);
}

TEST_CASE("inversion parity equals transposition parity") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto v = random_sample(rng, 1 + trial % 12);
    CHECK(parity_of_values(v) == transposition_count_parity(v));
  }
}

TEST_CASE("appending an element adds the delta of the greater count") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto v = random_sample(rng, 1 + trial % 12);
    const int e = v.back();
    v.pop_back();
    const auto greater = std::count_if(v.begin(), v.end(), [&](int x) { return x > e; });
    const Parity before = parity_of_values(v);
    v.push_back(e);
    CHECK(parity_of_values(v) == before + append_parity_delta(static_cast<std::uint64_t>(greater)));
  }
}

TEST_CASE("relabeling by an increasing map keeps the parity") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto v = random_sample(rng, 1 + trial % 12);
    std::vector<long long> mapped;
    for (int x : v) mapped.push_back(1000LL * x + static_cast<long long>(x) * x * x);
    CHECK(parity_of_values(v) == inversion_parity(std::span<const long long>(mapped)));
  }
}

TEST_CASE("one adjacent swap flips the parity") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    auto v = random_sample(rng, 2 + trial % 11);
    const std::size_t i = rng() % (v.size() - 1);
    const Parity before = parity_of_values(v);
    std::swap(v[i], v[i + 1]);
    CHECK(parity_of_values(v) == flip(before));
  }
}
