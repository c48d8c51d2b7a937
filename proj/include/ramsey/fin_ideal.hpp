#pragma once

#include <optional>
#include <set>

#include "ramsey/engine.hpp"
#include "ramsey/stream.hpp"

namespace ramsey {

// Finite set of n-tuples of naturals.
struct TupleSet {
  unsigned dim = 1;
  std::set<std::vector<Nat>> elems;

  void check_dims() const;
};

// Depth-n tree, prefix-closed, every internal node with at least `branching`
// children: the finite witness that a set of n-tuples is not small.
struct SplittingTree {
  unsigned branching = 1;
  unsigned depth = 1;
  std::set<std::vector<Nat>> nodes;  // all lengths 0..depth, including the root

  // Checks prefix-closure and the branching condition; when `leaves_within`
  // is given, also that every depth-level node belongs to it.
  bool validate(const TupleSet* leaves_within = nullptr) const;
};

// Decision procedure: the lexicographically least b-splitting tree inside X,
// or nullopt when none exists.
std::optional<SplittingTree> has_splitting_tree(const TupleSet& X, unsigned b);

// Tuple-valued function on sorted r-tuples, used by the smallness extractor.
struct NatTupleFunction {
  unsigned arity = 1;
  unsigned out_dim = 2;
  std::function<std::vector<Nat>(std::span<const Nat>, FuelMeter&)> rule;
  std::string label;
};

struct FinSmallResult {
  std::vector<Nat> prefix;   // materialized B
  std::string case_kind;     // "column" | "partial-function" | "pinned-coordinate" | "diagonal"
  std::optional<Nat> column;                       // arity 1, column case
  std::optional<std::pair<unsigned, Nat>> pinned;  // coordinate pinned by convergence
  TupleSet image;            // f''[B]^n over the materialized prefix
  bool tree_free = false;    // image contains no b-splitting tree
  unsigned branching = 2;
};

// Thins the base stream so the image of f on it is small: at arity 1 the
// image is a single column or a partial function; at higher arities the
// recursive construction plus convergence in the (n+1)-fold power of omega+1
// either pins a coordinate or certifies smallness via the tree check.
FinSmallResult fin_small_extract(const NatTupleFunction& f, NatStream base,
                                 const ExtractOptions& opt, unsigned b);

// The increasing-enumeration function: an (r+1)-subset, read as a sorted
// tuple in omega^(r+1).
NatTupleFunction g_function(unsigned r);

// All strictly increasing n-tuples drawn from B.
TupleSet up_arrow(std::span<const Nat> B, unsigned n);

// True iff `a` avoids every strictly increasing (dim a)-tuple of B with all
// entries >= cut — the finitized criterion for convergence to infinity.
bool check_avoidance(const TupleSet& a, std::span<const Nat> B, Nat cut);

// Finite witness that no subset tames the pair-enumeration function: a
// floor(|B|/(r+1))-splitting tree of depth r+1 inside B^{increasing r+1},
// built from consecutive blocks of B.
SplittingTree mad_diagnostic(std::span<const Nat> B, unsigned r);

}  // namespace ramsey
