#pragma once

#include <vector>

#include "ramsey/rng.hpp"
#include "ramsey/space.hpp"

namespace ramsey::testing {

inline Dyadic dy(long num, std::uint64_t exp = 0) {
  return Dyadic::scaled(mpz_class(num), exp);
}

inline std::vector<Nat> nats(std::initializer_list<Nat> xs) { return xs; }

// Random member of a builtin space, exercised by the metric axiom and cover
// soundness property tests.
inline Point random_point(SplitMix64& rng, const Space& sp) {
  switch (sp.kind()) {
    case Space::Kind::UnitCube: {
      std::vector<Dyadic> coords;
      for (unsigned i = 0; i < sp.cube_dim(); ++i) {
        const std::uint64_t exp = rng.below(7);
        coords.push_back(Dyadic::scaled(mpz_class(static_cast<unsigned long>(
                                            rng.below((1ull << exp) + 1))),
                                        exp));
      }
      return Point::cube(std::move(coords));
    }
    case Space::Kind::OmegaPlusOne:
      if (rng.below(8) == 0) return Point::omega_infinity();
      return Point::omega(rng.below(24));
    case Space::Kind::Cantor: {
      std::vector<std::uint8_t> bits;
      const std::uint64_t len = rng.below(9);
      for (std::uint64_t i = 0; i < len; ++i)
        bits.push_back(static_cast<std::uint8_t>(rng.below(2)));
      return Point::cantor(std::move(bits), static_cast<std::uint8_t>(rng.below(2)));
    }
    case Space::Kind::FiniteDiscrete:
      return Point::discrete(rng.below(sp.discrete_size()));
    case Space::Kind::Product: {
      Point::TupleCoords cs;
      for (const Space& f : sp.factors()) cs.push_back(random_point(rng, f));
      return Point::tuple(std::move(cs));
    }
    case Space::Kind::OmegaPower: {
      Point::TupleCoords cs;
      const std::uint64_t len = rng.below(5);
      for (std::uint64_t i = 0; i < len; ++i)
        cs.push_back(random_point(rng, sp.power_factor()));
      return Point::tuple(std::move(cs)).normalized(sp);
    }
  }
  throw Error("unreachable");
}

}  // namespace ramsey::testing
