#include <set>
#include <string>

#include "doctest.h"
#include "knapsack/permutation.hpp"

using namespace knapsack;

TEST_CASE("factorial_carry worked example") {
  const LehmerCode code = factorial_carry(100, 6);
  CHECK(std::vector<std::size_t>(code.digits().begin(), code.digits().end()) ==
        std::vector<std::size_t>{0, 4, 0, 2, 0, 0});
  CHECK(lehmer_to_index(code) == 100);

  const std::vector<char> d0{'A', 'B', 'C', 'D', 'E', 'F'};
  CHECK(permute<char>(d0, code) == std::vector<char>{'A', 'F', 'B', 'E', 'C', 'D'});
}

TEST_CASE("factorial_carry boundaries") {
  CHECK(factorial_carry(0, 6) == LehmerCode::identity(6));
  const LehmerCode top = factorial_carry(719, 6);
  CHECK(std::vector<std::size_t>(top.digits().begin(), top.digits().end()) ==
        std::vector<std::size_t>{5, 4, 3, 2, 1, 0});
  CHECK(lehmer_to_index(top) == 719);
  CHECK_THROWS_AS(factorial_carry(720, 6), OutOfRange);
  CHECK_THROWS_AS(factorial_carry(-1, 6), OutOfRange);
  CHECK(factorial_carry(0, 0).size() == 0);
}

TEST_CASE("LehmerCode digit bounds") {
  CHECK_NOTHROW(LehmerCode({2, 1, 0}));
  CHECK_THROWS_AS(LehmerCode({3, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(LehmerCode({0, 0, 1}), InvalidInput);
}

TEST_CASE("permute") {
  const std::vector<char> abc{'A', 'B', 'C'};
  CHECK(permute<char>(abc, LehmerCode({2, 1, 0})) == std::vector<char>{'C', 'B', 'A'});
  CHECK(permute<char>(abc, LehmerCode::identity(3)) == abc);
  CHECK_THROWS_AS(permute<char>(abc, LehmerCode::identity(4)), InvalidInput);
}

TEST_CASE("round trip is exhaustive for n <= 8") {
  for (std::size_t n = 0; n <= 8; ++n) {
    const unsigned long count = factorial(n).get_ui();
    for (unsigned long m = 0; m < count; ++m) {
      REQUIRE(lehmer_to_index(factorial_carry(m, n)) == m);
    }
  }
}

TEST_CASE("round trip on sampled large indices") {
  SeededRng rng(7);
  for (std::size_t n : {20u, 100u, 170u}) {
    for (int i = 0; i < 50; ++i) {
      const Integer m = rng.uniform_below(factorial(n));
      CHECK(lehmer_to_index(factorial_carry(m, n)) == m);
    }
  }
}

TEST_CASE("distinct indices give distinct permutations of the input") {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<int> items(n);
    for (std::size_t i = 0; i < n; ++i) items[i] = static_cast<int>(i);
    std::set<std::vector<int>> seen;
    const unsigned long count = factorial(n).get_ui();
    for (unsigned long m = 0; m < count; ++m) {
      auto perm = permute<int>(items, factorial_carry(m, n));
      auto sorted = perm;
      std::sort(sorted.begin(), sorted.end());
      REQUIRE(sorted == items);
      seen.insert(std::move(perm));
    }
    CHECK(seen.size() == count);
  }
}
