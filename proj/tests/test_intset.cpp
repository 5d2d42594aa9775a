#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "sumcover/intset.hpp"
#include "oracles.hpp"

using namespace sumcover;

TEST_CASE("IntSet canonicalizes and exposes accessors") {
  IntSet s{5, -2, 9, 0};
  REQUIRE(s.values() == std::vector<std::int64_t>{-2, 0, 5, 9});
  REQUIRE(s.size() == 4);
  REQUIRE(s.min() == -2);
  REQUIRE(s.max() == 9);
  REQUIRE(s.contains(5));
  REQUIRE_FALSE(s.contains(4));
  REQUIRE(IntSet({3, 3, 1}) == IntSet({1, 3}));
  REQUIRE_THROWS_AS(IntSet{}.min(), std::invalid_argument);
}

TEST_CASE("translate and dilate by definition") {
  REQUIRE(translate(IntSet{0, 1, 2}, 5) == IntSet{5, 6, 7});
  REQUIRE(translate(IntSet{-2, 0}, 2) == IntSet{0, 2});
  REQUIRE(translate(IntSet{0, 3, 5}, 0) == IntSet{0, 3, 5});
  REQUIRE(dilate(IntSet{0, 2, 5}, 3) == IntSet{0, 6, 15});
  REQUIRE(dilate(IntSet{1, 2}, -1) == IntSet{-2, -1});
  REQUIRE(dilate(IntSet{0, 3, 5}, 1) == IntSet{0, 3, 5});
  REQUIRE(dilate(IntSet{1, 4}, 0) == IntSet{0});
}

TEST_CASE("overflow is detected, not wrapped") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  REQUIRE_THROWS_AS(translate(IntSet{big}, 1), ArithmeticOverflow);
  REQUIRE_THROWS_AS(dilate(IntSet{big / 2}, 3), ArithmeticOverflow);
  REQUIRE_THROWS_AS(checked_sub(std::numeric_limits<std::int64_t>::min(), 1),
                    ArithmeticOverflow);
}

TEST_CASE("normalize examples") {
  const NormalizedSet n1 = normalize(IntSet{6, 12, 21});
  REQUIRE(n1.a0 == 6);
  REQUIRE(n1.d == 3);
  REQUIRE(n1.reduced == IntSet{0, 2, 5});
  REQUIRE(n1.astar == 5);

  const NormalizedSet n2 = normalize(IntSet{5});
  REQUIRE(n2.a0 == 5);
  REQUIRE(n2.d == 1);
  REQUIRE(n2.reduced == IntSet{0});
  REQUIRE(n2.astar == 0);

  const NormalizedSet n3 = normalize(IntSet{0, 3, 5});
  REQUIRE(n3.a0 == 0);
  REQUIRE(n3.d == 1);
  REQUIRE(n3.reduced == IntSet{0, 3, 5});
  REQUIRE(n3.astar == 5);
}

TEST_CASE("normalize round-trips and satisfies its invariants") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> val(-300, 300);
  std::uniform_int_distribution<int> len(1, 10);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::int64_t> vals;
    for (int i = 0, n = len(rng); i < n; ++i) vals.push_back(val(rng));
    const IntSet a(std::move(vals));
    const NormalizedSet n = normalize(a);
    REQUIRE(n.reduced.min() == 0);
    REQUIRE(n.reduced.max() == n.astar);
    REQUIRE(n.d >= 1);
    if (n.reduced.size() >= 2) {
      std::int64_t g = 0;
      for (auto v : n.reduced) g = std::gcd(g, v);
      REQUIRE(g == 1);
    }
    REQUIRE(denormalize(n) == a);
  }
}

TEST_CASE("translate and dilate compose") {
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::int64_t> val(-50, 50);
  std::uniform_int_distribution<std::int64_t> coef(-6, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> vals;
    for (int i = 0; i < 5; ++i) vals.push_back(val(rng));
    const IntSet a(std::move(vals));
    const std::int64_t y = coef(rng);
    std::int64_t d = coef(rng);
    if (d == 0) d = 2;
    REQUIRE(dilate(translate(a, y), d) == translate(dilate(a, d), d * y));
  }
}

TEST_CASE("arithmetic progression detection") {
  REQUIRE(is_arithmetic_progression(IntSet{2, 5, 8, 11}));
  REQUIRE_FALSE(is_arithmetic_progression(IntSet{0, 1, 3}));
  REQUIRE(is_arithmetic_progression(IntSet{7}));
  REQUIRE(is_arithmetic_progression(IntSet{3, 10}));

  // invariant under translation and nonzero dilation
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::int64_t> val(-30, 30);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> vals;
    for (int i = 0; i < 4; ++i) vals.push_back(val(rng));
    const IntSet a(std::move(vals));
    const bool ap = is_arithmetic_progression(a);
    REQUIRE(is_arithmetic_progression(translate(a, val(rng))) == ap);
    std::int64_t d = val(rng);
    if (d == 0) d = -3;
    REQUIRE(is_arithmetic_progression(dilate(a, d)) == ap);
    REQUIRE(ap == oracle::brute_is_ap(a.values()));
  }
}

TEST_CASE("set literal parsing") {
  REQUIRE(parse_set_literal("0,3,5") == IntSet{0, 3, 5});
  REQUIRE(parse_set_literal(" -2 , 7,1") == IntSet{-2, 1, 7});
  REQUIRE(parse_set_literal("5,3,0") == IntSet{0, 3, 5});  // order-insensitive
  REQUIRE(parse_set_literal("42") == IntSet{42});
  REQUIRE_THROWS_AS(parse_set_literal(""), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_set_literal("1,,2"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_set_literal("1,2,"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_set_literal("a,b"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_set_literal("3,5,3"), std::invalid_argument);  // duplicates rejected
  REQUIRE_THROWS_AS(parse_set_literal("1.5"), std::invalid_argument);
  REQUIRE(format_set_literal(IntSet{-2, 1, 7}) == "-2,1,7");
  REQUIRE(parse_set_literal(format_set_literal(IntSet{0, 3, 5})) == IntSet{0, 3, 5});
}
