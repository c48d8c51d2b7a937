#include "ramsey/fixtures.hpp"

#include "ramsey/dsl.hpp"
#include "ramsey/engine.hpp"

namespace ramsey {

std::vector<FixtureInfo> list_fixtures() {
  return {
      {"min-decay", "f(s) = 2^-(min s + 1) in the unit interval", 2, true, "unit-cube:1"},
      {"sum-decay", "f({k,l}) = 2^-(k+1) + 2^-(l+1) in the unit interval", 2, false,
       "unit-cube:1"},
      {"mad-pair", "f({k,l}) = (k,l) in (omega+1)^2", 2, false,
       "product(omega1,omega1)"},
      {"min-parity", "f(s) = (min s) mod 2, a two-coloring", 2, true, "discrete:2"},
      {"max-parity", "f(s) = (max s) mod 2, a two-coloring", 2, true, "discrete:2"},
      {"G(r)", "the increasing enumeration of an (r+1)-set in (omega+1)^(r+1)", 3, false,
       "product(omega1,...)"},
      {"lift-of(name)", "f(s) = inner(s minus its max)", 3, false, "inner's space"},
      {"const(p)", "constant function with value p", 2, true, "any (default unit-cube:1)"},
  };
}

namespace {

void require_space(const std::optional<Space>& given, const Space& fixed,
                   const std::string& name) {
  if (given && !(*given == fixed))
    throw ConfigError("fixture '" + name + "' lives in " + fixed.descriptor() +
                      ", not " + given->descriptor());
}

unsigned pick_arity(const std::optional<unsigned>& given, unsigned def, bool flexible,
                    const std::string& name) {
  if (!given) return def;
  if (*given == 0) throw ConfigError("arity must be positive");
  if (!flexible && *given != def)
    throw ConfigError("fixture '" + name + "' has arity " + std::to_string(def));
  return *given;
}

}  // namespace

TupleFunction builtin_fixture(const std::string& name, std::optional<unsigned> arity,
                              std::optional<Space> space) {
  std::string head = name;
  std::string arg;
  if (auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw UnknownFixture("malformed fixture name '" + name + "'");
    head = name.substr(0, open);
    arg = name.substr(open + 1, name.size() - open - 2);
  }

  if (head == "min-decay") {
    Space target = Space::unit_cube(1);
    require_space(space, target, head);
    const unsigned r = pick_arity(arity, 2, true, head);
    return TupleFunction(name, r, target, [](std::span<const Nat> s) {
      return Point::cube({Dyadic::pow2neg(s.front() + 1)});
    });
  }
  if (head == "sum-decay") {
    Space target = Space::unit_cube(1);
    require_space(space, target, head);
    const unsigned r = pick_arity(arity, 2, false, head);
    return TupleFunction(name, r, target, [](std::span<const Nat> s) {
      return Point::cube({Dyadic::pow2neg(s[0] + 1) + Dyadic::pow2neg(s[1] + 1)});
    });
  }
  if (head == "mad-pair") {
    Space target = Space::product({Space::omega_plus_one(), Space::omega_plus_one()});
    require_space(space, target, head);
    const unsigned r = pick_arity(arity, 2, false, head);
    return TupleFunction(name, r, target, [](std::span<const Nat> s) {
      return Point::tuple({Point::omega(s[0]), Point::omega(s[1])});
    });
  }
  if (head == "min-parity" || head == "max-parity") {
    Space target = Space::finite_discrete(2);
    require_space(space, target, head);
    const unsigned r = pick_arity(arity, 2, true, head);
    const bool use_min = head == "min-parity";
    return TupleFunction(name, r, target, [use_min](std::span<const Nat> s) {
      return Point::discrete((use_min ? s.front() : s.back()) % 2);
    });
  }
  if (head == "G") {
    if (arg.empty()) throw UnknownFixture("G needs an arity parameter, e.g. G(2)");
    const unsigned r = static_cast<unsigned>(std::stoul(arg));
    if (r < 1) throw ConfigError("G needs r >= 1");
    std::vector<Space> factors(r + 1, Space::omega_plus_one());
    Space target = Space::product(std::move(factors));
    require_space(space, target, name);
    const unsigned want = pick_arity(arity, r + 1, false, name);
    return TupleFunction(name, want, target, [](std::span<const Nat> s) {
      Point::TupleCoords cs;
      for (Nat v : s) cs.push_back(Point::omega(v));
      return Point::tuple(std::move(cs));
    });
  }
  if (head == "lift-of") {
    if (arg.empty()) throw UnknownFixture("lift-of needs an inner fixture name");
    TupleFunction inner = builtin_fixture(arg, std::nullopt, std::nullopt);
    require_space(space, inner.target(), name);
    pick_arity(arity, inner.arity() + 1, false, name);
    return lift(inner);
  }
  if (head == "const") {
    if (arg.empty()) throw UnknownFixture("const needs a point literal, e.g. const(1/2)");
    Space target = space.value_or(Space::unit_cube(1));
    const unsigned r = arity.value_or(2);
    if (r == 0) throw ConfigError("arity must be positive");
    Point value = parse_point_literal(arg, target);
    return TupleFunction(name, r, target,
                         [value](std::span<const Nat>) { return value; });
  }
  throw UnknownFixture("unknown fixture '" + name + "'");
}

Coloring as_coloring(const TupleFunction& f) {
  if (f.target().kind() != Space::Kind::FiniteDiscrete)
    throw ConfigError("as_coloring needs a finite discrete target");
  return Coloring{f.arity(), f.target().discrete_size(),
                  [f](std::span<const Nat> s, FuelMeter& meter) -> Color {
                    return f.eval(s, meter).discrete_value();
                  },
                  f.label()};
}

}  // namespace ramsey
