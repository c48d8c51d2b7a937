#include <doctest.h>

#include "ramsey/engine.hpp"
#include "ramsey/fixtures.hpp"
#include "test_helpers.hpp"

using namespace ramsey;
using ramsey::testing::dy;

TEST_CASE("builtin fixture values") {
  auto meter = unlimited_meter();

  TupleFunction mad = builtin_fixture("mad-pair");
  CHECK(mad.eval(std::vector<Nat>{2, 9}, *meter) ==
        Point::tuple({Point::omega(2), Point::omega(9)}));

  TupleFunction c = builtin_fixture("const(1/2)");
  CHECK(c.eval(std::vector<Nat>{4, 17}, *meter) == Point::cube({dy(1, 1)}));

  TupleFunction sum = builtin_fixture("sum-decay");
  CHECK(sum.eval(std::vector<Nat>{0, 1}, *meter) == Point::cube({dy(3, 2)}));

  TupleFunction mind = builtin_fixture("min-decay", 3);
  CHECK(mind.eval(std::vector<Nat>{1, 5, 9}, *meter) == Point::cube({dy(1, 2)}));

  TupleFunction g2 = builtin_fixture("G(2)");
  CHECK(g2.arity() == 3);
  CHECK(g2.eval(std::vector<Nat>{1, 4, 9}, *meter) ==
        Point::tuple({Point::omega(1), Point::omega(4), Point::omega(9)}));

  TupleFunction parity = builtin_fixture("min-parity");
  CHECK(parity.eval(std::vector<Nat>{3, 8}, *meter) == Point::discrete(1));
  Coloring cpar = as_coloring(parity);
  CHECK(cpar.rule(std::vector<Nat>{3, 8}, *meter) == 1);
}

TEST_CASE("lift drops the maximum coordinate") {
  auto meter = unlimited_meter();
  TupleFunction lifted = builtin_fixture("lift-of(sum-decay)");
  CHECK(lifted.arity() == 3);
  CHECK(lifted.eval(std::vector<Nat>{0, 1, 5}, *meter) == Point::cube({dy(3, 2)}));

  TupleFunction g = builtin_fixture("min-decay", 1);
  TupleFunction f = lift(g);
  CHECK(f.arity() == 2);
  // f({k,l}) = 2^-(k+1) regardless of l
  CHECK(f.eval(std::vector<Nat>{2, 11}, *meter) == Point::cube({dy(1, 3)}));
  CHECK(f.eval(std::vector<Nat>{2, 64}, *meter) == Point::cube({dy(1, 3)}));

  TupleFunction lifted_pair = lift(builtin_fixture("mad-pair"));
  CHECK(lifted_pair.eval(std::vector<Nat>{1, 4, 9}, *meter) ==
        Point::tuple({Point::omega(1), Point::omega(4)}));
}

TEST_CASE("fixture resolution errors") {
  CHECK_THROWS_AS(builtin_fixture("unknown-thing"), UnknownFixture);
  CHECK_THROWS_AS(builtin_fixture("sum-decay", 3), ConfigError);
  CHECK_THROWS_AS(builtin_fixture("mad-pair", std::nullopt, Space::unit_cube(1)),
                  ConfigError);
  CHECK_THROWS_AS(builtin_fixture("G()"), UnknownFixture);
  CHECK_THROWS_AS(builtin_fixture("const(1/2", std::nullopt, std::nullopt),
                  UnknownFixture);
}

TEST_CASE("registry names are unique") {
  auto fixtures = list_fixtures();
  for (std::size_t i = 0; i < fixtures.size(); ++i)
    for (std::size_t j = i + 1; j < fixtures.size(); ++j)
      CHECK(fixtures[i].name != fixtures[j].name);
}
