#include <doctest.h>

#include "ramsey/dsl.hpp"
#include "test_helpers.hpp"

using namespace ramsey;
using ramsey::testing::dy;

namespace {
const Space kLine = Space::unit_cube(1);
const Space kOmegaSq =
    Space::product({Space::omega_plus_one(), Space::omega_plus_one()});
}  // namespace

TEST_CASE("pow2neg expression evaluates exactly") {
  TupleFunction f = dsl::make_tuple_function("pow2neg(x0+1)", 2, kLine);
  auto meter = unlimited_meter();
  CHECK(f.eval(std::vector<Nat>{3, 7}, *meter) == Point::cube({dy(1, 4)}));
}

TEST_CASE("the pair expression builds omega-square points") {
  TupleFunction f = dsl::make_tuple_function("(x0, x1)", 2, kOmegaSq);
  auto meter = unlimited_meter();
  CHECK(f.eval(std::vector<Nat>{2, 9}, *meter) ==
        Point::tuple({Point::omega(2), Point::omega(9)}));
}

TEST_CASE("syntax errors carry 1-based positions") {
  try {
    dsl::parse("x0 +", 2);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.position == 5);
  }
  CHECK_THROWS_AS(dsl::parse("", 1), SyntaxError);
  CHECK_THROWS_AS(dsl::parse("min(x0)", 1), SyntaxError);
  CHECK_THROWS_AS(dsl::parse("if(x0 ! x0, 1, 2)", 1), SyntaxError);
  CHECK_THROWS_AS(dsl::parse("(x0, x1", 2), SyntaxError);
  CHECK_THROWS_AS(dsl::parse("x0 x1", 2), SyntaxError);
}

TEST_CASE("type errors") {
  // dyadic where an integer is required
  CHECK_THROWS_AS(dsl::make_tuple_function("pow2neg(x0)", 1, Space::omega_plus_one()),
                  TypeError);
  CHECK_THROWS_AS(dsl::parse("pow2neg(pow2neg(x0))", 1), TypeError);
  CHECK_THROWS_AS(dsl::parse("(x0, x1) + 1", 2), TypeError);
  CHECK_THROWS_AS(dsl::parse("x0 mod pow2neg(1)", 1), TypeError);
  // tuple arity mismatch with the target
  CHECK_THROWS_AS(dsl::make_tuple_function("(x0, x1)", 2, Space::unit_cube(3)), TypeError);
  // variables outside the arity
  CHECK_THROWS_AS(dsl::parse("x2", 2), TypeError);
  // mod by a literal zero is rejected at parse time
  CHECK_THROWS_AS(dsl::parse("x0 mod 0", 1), TypeError);
}

TEST_CASE("mod by a vanishing expression fails at evaluation") {
  TupleFunction f = dsl::make_tuple_function("pow2neg(x0 mod (x1 - x1))", 2, kLine);
  auto meter = unlimited_meter();
  CHECK_THROWS_AS(f.eval(std::vector<Nat>{1, 2}, *meter), EvalError);
}

TEST_CASE("conditionals and scalar promotion") {
  TupleFunction f =
      dsl::make_tuple_function("if(x0 < 3, pow2neg(x1), 0)", 2, kLine);
  auto meter = unlimited_meter();
  CHECK(f.eval(std::vector<Nat>{1, 2}, *meter) == Point::cube({dy(1, 2)}));
  CHECK(f.eval(std::vector<Nat>{4, 9}, *meter) == Point::cube({dy(0)}));

  Coloring c = dsl::make_coloring("if(x0 = 0, 1, x0 + 1)", 1, 3);
  CHECK(c.rule(std::vector<Nat>{0}, *meter) == 1);
  CHECK(c.rule(std::vector<Nat>{3}, *meter) == 1);  // (3+1) mod 3
}

TEST_CASE("parse-print identity on random integer expressions") {
  SplitMix64 rng(0x5EED);
  for (int i = 0; i < 120; ++i) {
    const unsigned arity = 1 + static_cast<unsigned>(rng.below(3));
    const std::string src = dsl::random_int_expression(rng, arity, 1 + rng.below(5));
    dsl::ExprPtr ast = dsl::parse(src, arity);
    const std::string printed = dsl::print(*ast);
    dsl::ExprPtr again = dsl::parse(printed, arity);
    REQUIRE(dsl::equal(*ast, *again));
    CHECK(dsl::print(*again) == printed);
  }
}

TEST_CASE("parse-print identity on random unit expressions") {
  SplitMix64 rng(0xF00D);
  for (int i = 0; i < 80; ++i) {
    const unsigned arity = 1 + static_cast<unsigned>(rng.below(3));
    const std::string src = dsl::random_unit_expression(rng, arity, 1 + rng.below(4));
    dsl::ExprPtr ast = dsl::parse(src, arity);
    dsl::ExprPtr again = dsl::parse(dsl::print(*ast), arity);
    REQUIRE(dsl::equal(*ast, *again));
  }
}

TEST_CASE("random unit expressions stay inside the unit interval") {
  SplitMix64 rng(0xBEEF);
  auto meter = unlimited_meter();
  for (int i = 0; i < 60; ++i) {
    const std::string src = dsl::random_unit_expression(rng, 2, 3);
    TupleFunction f = dsl::make_tuple_function(src, 2, kLine);
    for (int t = 0; t < 10; ++t) {
      const Nat a = rng.below(40);
      const std::vector<Nat> tuple{a, a + 1 + rng.below(40)};
      const Point p = f.eval(tuple, *meter);
      const Point q = f.eval(tuple, *meter);  // determinism
      CHECK(p == q);
    }
  }
}

TEST_CASE("integer tuple functions for the smallness extractor") {
  NatTupleFunction f = dsl::make_nat_tuple_function("(0, x0)", 1, 2);
  auto meter = unlimited_meter();
  CHECK(f.rule(std::vector<Nat>{7}, *meter) == std::vector<Nat>{0, 7});
  CHECK_THROWS_AS(dsl::make_nat_tuple_function("x0", 1, 2), TypeError);
  CHECK_THROWS_AS(dsl::make_nat_tuple_function("(x0, pow2neg(x0))", 1, 2), TypeError);
}

TEST_CASE("point literals") {
  CHECK(parse_point_literal("1/2", kLine) == Point::cube({dy(1, 1)}));
  CHECK(parse_point_literal("(1/2, 1)", Space::unit_cube(2)) ==
        Point::cube({dy(1, 1), dy(1)}));
  CHECK(parse_point_literal("inf", Space::omega_plus_one()) == Point::omega_infinity());
  CHECK(parse_point_literal("(3, inf)", kOmegaSq) ==
        Point::tuple({Point::omega(3), Point::omega_infinity()}));
  CHECK_THROWS_AS(parse_point_literal("1/3", kLine), ConfigError);
  CHECK_THROWS_AS(parse_point_literal("2", kLine), ConfigError);  // outside [0,1]
  CHECK_THROWS_AS(parse_point_literal("inf", kLine), ConfigError);
}
