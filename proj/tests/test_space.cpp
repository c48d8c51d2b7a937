#include <doctest.h>

#include "test_helpers.hpp"

using namespace ramsey;
using ramsey::testing::dy;
using ramsey::testing::random_point;

namespace {

const Space kLine = Space::unit_cube(1);
const Space kSquare = Space::unit_cube(2);
const Space kOmega = Space::omega_plus_one();
const Space kOmegaSq = Space::product({kOmega, kOmega});

Point line(long num, std::uint64_t exp) { return Point::cube({dy(num, exp)}); }

}  // namespace

TEST_CASE("distance examples") {
  CHECK(distance(kLine, line(1, 1), line(1, 1)) == Dyadic());
  CHECK(distance(kOmega, Point::omega(1), Point::omega_infinity()) == dy(1, 1));
  CHECK(distance(kSquare, Point::cube({dy(0), dy(0)}), Point::cube({dy(1, 2), dy(1)})) ==
        Dyadic::one());
  CHECK(distance(kOmega, Point::omega(0), Point::omega(2)) == dy(3, 2));
  CHECK(distance(kOmegaSq, Point::tuple({Point::omega(0), Point::omega(0)}),
                 Point::tuple({Point::omega_infinity(), Point::omega_infinity()})) ==
        Dyadic::one());
}

TEST_CASE("space membership and mismatch") {
  CHECK(kLine.contains(line(1, 1)));
  CHECK_FALSE(kLine.contains(Point::cube({dy(3, 1)})));  // 3/2 outside [0,1]
  CHECK_THROWS_AS(distance(kLine, Point::omega(0), line(0, 0)), SpaceMismatch);
  CHECK_THROWS_AS(distance(kSquare, line(0, 0), line(0, 0)), SpaceMismatch);
}

TEST_CASE("cover examples") {
  CoverLevel cv = cover(kLine, 1);
  CHECK(cv.count() == 3);
  auto centers = cv.all_centers();
  CHECK(centers[0] == line(0, 0));
  CHECK(centers[1] == line(1, 1));
  CHECK(centers[2] == line(1, 0));

  CoverLevel d3 = cover(Space::finite_discrete(3), 2);
  CHECK(d3.count() == 3);
  CHECK(d3.center(2) == Point::discrete(2));

  CoverLevel om2 = cover(kOmega, 2);
  CHECK(om2.count() == 3);  // centers 0, 1, inf
  CHECK(om2.center(2) == Point::omega_infinity());
  // the ball of radius 1/4 around inf holds every m >= 2
  for (Nat m = 2; m < 10; ++m)
    CHECK(distance(kOmega, Point::omega_infinity(), Point::omega(m)) <= Dyadic::pow2neg(2));
}

TEST_CASE("locate uses first-match order") {
  CoverLevel cv = cover(kLine, 1);
  CHECK(cv.locate(line(3, 3)) == 0);  // 3/8 is inside the ball around 0
  CHECK(cv.locate(line(1, 0)) == 1);  // |1 - 1/2| = 1/2 <= 1/2: first match is 1/2

  CoverLevel om2 = cover(kOmega, 2);
  CHECK(om2.locate(Point::omega_infinity()) == 2);
  CHECK(om2.locate(Point::omega(0)) == 0);
  CHECK(om2.locate(Point::omega(2)) == 1);  // |1/2 - 1/4| = 1/4, boundary hit
  CHECK(om2.locate(Point::omega(3)) == 2);

  CHECK(cover(Space::finite_discrete(2), 3).locate(Point::discrete(1)) == 1);
}

TEST_CASE("cover soundness on randomized points") {
  // level-8 covers of an omega-power of the line exceed the 2^62 index
  // width; that space is tested to level 6
  const std::vector<std::pair<Space, std::uint32_t>> spaces{
      {kLine, 8}, {kSquare, 8}, {kOmega, 8}, {Space::cantor(), 8},
      {Space::finite_discrete(5), 8}, {kOmegaSq, 8},
      {Space::product({kOmega, kLine}), 8}, {Space::omega_power(kOmega), 8},
      {Space::omega_power(kLine), 6}};
  SplitMix64 rng(0xC0FFEE);
  for (const auto& [sp, max_n] : spaces) {
    for (int trial = 0; trial < 40; ++trial) {
      const Point p = random_point(rng, sp);
      REQUIRE(sp.contains(p));
      for (std::uint32_t n = 0; n <= max_n; ++n) {
        CoverLevel cv = cover(sp, n);
        const std::uint64_t idx = cv.locate(p);
        REQUIRE(idx < cv.count());
        CHECK(distance(sp, cv.center(idx), p) <= Dyadic::pow2neg(n));
        // first-match: no earlier center may contain p (checked on small covers)
        if (cv.count() <= 64) {
          for (std::uint64_t j = 0; j < idx; ++j)
            CHECK(distance(sp, cv.center(j), p) > Dyadic::pow2neg(n));
        }
      }
    }
  }
}

TEST_CASE("metric axioms hold exactly on randomized triples") {
  const std::vector<Space> spaces{kLine, kSquare, kOmega, Space::cantor(),
                                  Space::finite_discrete(4), kOmegaSq,
                                  Space::omega_power(kLine)};
  SplitMix64 rng(0xDEADBEEF);
  for (const Space& sp : spaces) {
    for (int trial = 0; trial < 60; ++trial) {
      const Point a = random_point(rng, sp);
      const Point b = random_point(rng, sp);
      const Point c = random_point(rng, sp);
      const Dyadic ab = distance(sp, a, b);
      CHECK(ab == distance(sp, b, a));
      CHECK((ab == Dyadic()) == (a.normalized(sp) == b.normalized(sp)));
      CHECK(ab <= distance(sp, a, c) + distance(sp, c, b));
    }
  }
}

TEST_CASE("product metric clamps coordinate i at 2^-i") {
  SplitMix64 rng(7);
  const Space sp = Space::omega_power(kOmega);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t i = rng.below(5);
    Point::TupleCoords a(i + 1, kOmega.basepoint());
    Point::TupleCoords b = a;
    a[i] = random_point(rng, kOmega);
    b[i] = random_point(rng, kOmega);
    // points differing in coordinate i alone stay within 2^-i
    CHECK(distance(sp, Point::tuple(a).normalized(sp), Point::tuple(b).normalized(sp)) <=
          Dyadic::pow2neg(i));
  }
}

TEST_CASE("space descriptors round-trip") {
  const std::vector<std::string> descs{
      "unit-cube:1", "unit-cube:3", "omega1", "cantor", "discrete:4",
      "product(omega1,omega1)", "product(unit-cube:2,omega1,discrete:2)",
      "omega-product(omega1)", "omega-product(unit-cube:1)",
      "product(product(omega1,cantor),unit-cube:1)"};
  for (const std::string& d : descs) {
    const Space sp = Space::parse_descriptor(d);
    CHECK(sp.descriptor() == d);
    CHECK(Space::parse_descriptor(sp.descriptor()) == sp);
    CHECK(sp.contains(sp.basepoint()));
  }
  CHECK_THROWS_AS(Space::parse_descriptor("torus"), ConfigError);
  CHECK_THROWS_AS(Space::parse_descriptor("product(omega1"), ConfigError);
}

TEST_CASE("cantor distance is two to the minus first difference") {
  const Space c = Space::cantor();
  const Point a = Point::cantor({0, 1, 1}, 0);
  const Point b = Point::cantor({0, 1}, 0);  // differs first at index 2
  CHECK(distance(c, a, b) == dy(1, 2));
  CHECK(distance(c, Point::cantor({}, 0), Point::cantor({}, 1)) == Dyadic::one());
  CHECK(distance(c, Point::cantor({0, 1, 1}, 0), Point::cantor({0, 1, 1}, 0)) == Dyadic());
}
