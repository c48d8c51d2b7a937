#include <doctest.h>

#include "ramsey/certificate.hpp"
#include "ramsey/fixtures.hpp"
#include "ramsey/ramsey.hpp"
#include "test_helpers.hpp"

using namespace ramsey;

namespace {

Coloring make(unsigned arity, std::uint64_t palette,
              std::function<Color(std::span<const Nat>)> rule, std::string label) {
  return Coloring{arity, palette,
                  [rule = std::move(rule)](std::span<const Nat> s, FuelMeter& m) {
                    m.charge_oracle();
                    return rule(s);
                  },
                  std::move(label)};
}

const Coloring kPentagon = make(
    2, 2,
    [](std::span<const Nat> s) {
      const Nat d = s[1] - s[0];
      return Color(d == 1 || d == 4 ? 1 : 0);
    },
    "pentagon");

// Exhaustive monochromaticity check over the materialized prefix.
void check_monochromatic(const Coloring& c, NatStream h, Color color, std::size_t len,
                         std::size_t discard = 0) {
  auto meter = unlimited_meter();
  auto prefix = h.materialize(len, *meter);
  for (CombinationIter it(prefix.size(), c.arity); it.valid(); it.next()) {
    if (it.positions().front() < discard) continue;
    std::vector<Nat> tuple;
    for (std::size_t pos : it.positions()) tuple.push_back(prefix[pos]);
    REQUIRE(c.rule(tuple, *meter) == color);
  }
}

}  // namespace

TEST_CASE("exact search on the constant coloring") {
  const Coloring constant = make(2, 2, [](std::span<const Nat>) { return Color(0); }, "const");
  auto witness = find_homogeneous_exact(constant, 6, 6);
  REQUIRE(witness);
  CHECK(witness->subset == std::vector<Nat>{0, 1, 2, 3, 4, 5});
  CHECK(witness->color == 0);
  CHECK(witness->discarded.empty());
}

TEST_CASE("exact search: the pentagon has no monochromatic triangle") {
  CHECK_FALSE(find_homogeneous_exact(kPentagon, 5, 3));
}

TEST_CASE("exact search on sum parity returns the lexicographically least witness") {
  const Coloring parity =
      make(2, 2, [](std::span<const Nat> s) { return Color((s[0] + s[1]) % 2); }, "sum-parity");
  auto witness = find_homogeneous_exact(parity, 6, 3);
  REQUIRE(witness);
  CHECK(witness->subset == std::vector<Nat>{0, 2, 4});
  CHECK(witness->color == 0);
}

TEST_CASE("min-parity extraction keeps the evens") {
  auto meter = unlimited_meter();
  const Coloring minpar =
      make(2, 2, [](std::span<const Nat> s) { return Color(s[0] % 2); }, "min-parity");
  RamseyExtract rec = infinite_ramsey_extract(minpar, NatStream::naturals(), meter, 16);
  CHECK(rec.color == 0);
  auto prefix = rec.stream.materialize(10, *meter);
  for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(prefix[i] == 2 * i);
  check_monochromatic(minpar, rec.stream, rec.color, 12);
}

TEST_CASE("constant colorings keep the whole base") {
  auto meter = unlimited_meter();
  for (unsigned r : {1u, 2u, 3u}) {
    const Coloring constant =
        make(r, 3, [](std::span<const Nat>) { return Color(0); }, "const");
    RamseyExtract rec =
        infinite_ramsey_extract(constant, NatStream::arithmetic(0, 3), meter, 12);
    CHECK(rec.color == 0);
    auto prefix = rec.stream.materialize(8, *meter);
    for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(prefix[i] == 3 * i);
  }
}

TEST_CASE("even-difference coloring yields a fixed-parity stream of color 1") {
  auto meter = unlimited_meter();
  const Coloring evendiff = make(
      2, 2, [](std::span<const Nat> s) { return Color((s[1] - s[0]) % 2 == 0 ? 1 : 0); },
      "even-difference");
  RamseyExtract rec = infinite_ramsey_extract(evendiff, NatStream::naturals(), meter, 16);
  CHECK(rec.color == 1);
  auto prefix = rec.stream.materialize(12, *meter);
  const Nat parity = prefix[0] % 2;
  for (Nat v : prefix) CHECK(v % 2 == parity);
  check_monochromatic(evendiff, rec.stream, rec.color, 12);
}

TEST_CASE("extraction output is a substream of its base") {
  auto meter = unlimited_meter();
  const Coloring minpar =
      make(2, 2, [](std::span<const Nat> s) { return Color(s[0] % 2); }, "min-parity");
  NatStream base = NatStream::arithmetic(0, 3);
  RamseyExtract rec = infinite_ramsey_extract(minpar, base, meter, 12);
  auto prefix = rec.stream.materialize(10, *meter);
  for (Nat v : prefix) CHECK(base.contains(v, *meter));
}

TEST_CASE("pre-homogeneous extraction at arity 3") {
  auto meter = unlimited_meter();
  const Coloring c = make(
      3, 2, [](std::span<const Nat> s) { return Color((s[0] + s[1] + s[2]) % 2); },
      "triple-sum-parity");
  RamseyExtract rec = infinite_ramsey_extract(c, NatStream::naturals(), meter, 14);
  check_monochromatic(c, rec.stream, rec.color, 12);
}

TEST_CASE("almost homogeneous families chain and pseudo-intersect") {
  auto meter = unlimited_meter();
  const Coloring minpar =
      make(2, 2, [](std::span<const Nat> s) { return Color(s[0] % 2); }, "min-parity");
  const Coloring maxpar =
      make(2, 2, [](std::span<const Nat> s) { return Color(s[1] % 2); }, "max-parity");

  SUBCASE("singleton family matches the plain extractor") {
    FamilyExtract fam = almost_homogeneous_family({minpar}, NatStream::naturals(), meter, 16);
    REQUIRE(fam.assignments.size() == 1);
    CHECK(fam.assignments[0].discard == 0);
    CHECK(fam.assignments[0].color == 0);
    auto prefix = fam.stream.materialize(8, *meter);
    for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(prefix[i] == 2 * i);
  }

  SUBCASE("min and max parity together land inside the evens") {
    FamilyExtract fam =
        almost_homogeneous_family({minpar, maxpar}, NatStream::naturals(), meter, 16);
    REQUIRE(fam.assignments.size() == 2);
    CHECK(fam.assignments[0].discard == 0);
    CHECK(fam.assignments[1].discard == 1);
    auto prefix = fam.stream.materialize(12, *meter);
    for (Nat v : prefix) CHECK(v % 2 == 0);
    for (std::size_t i = 0; i < fam.assignments.size(); ++i)
      check_monochromatic(i == 0 ? minpar : maxpar, fam.stream, fam.assignments[i].color,
                          12, fam.assignments[i].discard);
  }

  SUBCASE("two constant colorings keep the base") {
    const Coloring constant =
        make(2, 2, [](std::span<const Nat>) { return Color(1); }, "const");
    FamilyExtract fam =
        almost_homogeneous_family({constant, constant}, NatStream::naturals(), meter, 16);
    auto prefix = fam.stream.materialize(8, *meter);
    for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(prefix[i] == i);
    check_monochromatic(constant, fam.stream, 1, 8, 0);
  }
}

TEST_CASE("fuel exhaustion during extraction reports live classes") {
  auto meter = make_meter(Fuel{20, 100000});
  const Coloring alternating =
      make(1, 2, [](std::span<const Nat> s) { return Color(s[0] % 2); }, "parity");
  try {
    infinite_ramsey_extract(alternating, NatStream::naturals(), meter, 1000);
    FAIL("expected FuelExhausted");
  } catch (const FuelExhausted& fe) {
    CHECK(fe.context.find("live classes") != std::string::npos);
  }
}

TEST_CASE("induced colorings match locate of the image") {
  auto meter = unlimited_meter();
  TupleFunction f = builtin_fixture("min-decay");
  CoverLevel cv = cover(f.target(), 2);
  Coloring c = induced_coloring(f, cv);
  const std::vector<Nat> tuple{0, 3};
  CHECK(c.rule(tuple, *meter) == cv.locate(f.eval(tuple, *meter)));
  CHECK(c.palette == cv.count());
}
