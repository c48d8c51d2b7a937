#pragma once

#include <optional>

#include "ramsey/ramsey.hpp"

namespace ramsey {

struct FixtureInfo {
  std::string name;
  std::string summary;
  unsigned default_arity;
  bool flexible_arity;
  std::string space;
};

std::vector<FixtureInfo> list_fixtures();

// Resolves a registry name ("min-decay", "sum-decay", "mad-pair",
// "min-parity", "max-parity", "G(r)", "lift-of(name)", "const(literal)") to
// a tuple function. Overrides must be consistent with the fixture: flexible
// fixtures accept any arity, fixed ones reject mismatches.
TupleFunction builtin_fixture(const std::string& name,
                              std::optional<unsigned> arity = std::nullopt,
                              std::optional<Space> space = std::nullopt);

// Reads a function into a finite discrete space as a coloring.
Coloring as_coloring(const TupleFunction& f);

}  // namespace ramsey
