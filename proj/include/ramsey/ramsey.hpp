#pragma once

#include <functional>
#include <optional>

#include "ramsey/stream.hpp"
#include "ramsey/tuple_function.hpp"

namespace ramsey {

using Color = std::uint64_t;

// Total deterministic coloring of sorted r-tuples with a finite palette.
struct Coloring {
  unsigned arity;
  std::uint64_t palette;
  std::function<Color(std::span<const Nat>, FuelMeter&)> rule;
  std::string label;
};

struct HomogeneityWitness {
  std::vector<Nat> subset;
  Color color = 0;
  std::vector<Nat> discarded;  // initial segment excluded ("almost" homogeneity)
};

// The coloring induced by composing a tuple function with a cover level:
// the color of s is the index of the first cover ball containing f(s).
Coloring induced_coloring(const TupleFunction& f, const CoverLevel& cov);

// Exhaustive search for a size-m monochromatic subset of [0,N); returns the
// lexicographically least witness or nullopt. Complete, not heuristic.
std::optional<HomogeneityWitness> find_homogeneous_exact(const Coloring& c, Nat N,
                                                         std::size_t m);

struct RamseyExtract {
  NatStream stream;
  Color color = 0;
  std::size_t discard = 0;
};

// Effective infinite Ramsey: returns a substream H of base and a color j such
// that every r-subset of any materialized prefix of H has color j.
//
// r=1 is the pigeonhole under fuel: scan base and keep the first color class
// that accumulates `target` occurrences. For r>1, build a pre-homogeneous
// sequence a_0 < a_1 < ... with nested streams S_0 ⊇ S_1 ⊇ ..., where
// a_i = min S_i and S_{i+1} ⊆ S_i ∖ {a_i} is monochromatic (color j_i) for
// the (r-1)-ary coloring s ↦ c({a_i} ∪ s); then pigeonhole over i ↦ j_i.
// Ties break to the smallest color, then the smallest element.
//
// `target` backs the final pigeonhole (it bounds how many elements the
// output can promise); the per-stage color commitments inside the chain use
// the smaller `stage_target` (0 picks a default), which only affects how
// soon a stage commits, never the monochromaticity of the output.
RamseyExtract infinite_ramsey_extract(const Coloring& c, NatStream base,
                                      const FuelMeterPtr& meter, std::size_t target,
                                      std::size_t stage_target = 0);

struct FamilyAssignment {
  Color color = 0;
  std::size_t discard = 0;  // elements before this position may violate
};

struct FamilyExtract {
  NatStream stream;
  std::vector<FamilyAssignment> assignments;
};

// Simultaneous almost-homogeneity: chain the extractor over the colorings
// (H_i extracted inside H_{i-1}) and take the pseudo-intersection; coloring i
// is homogeneous past position i of the result.
FamilyExtract almost_homogeneous_family(const std::vector<Coloring>& cs, NatStream base,
                                        const FuelMeterPtr& meter, std::size_t target);

}  // namespace ramsey
