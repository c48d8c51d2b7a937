#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ramsey/space.hpp"

namespace ramsey {

// FNV-1a over the elements; memo-map iteration order is never observed.
struct TupleKeyHash {
  std::size_t operator()(const std::vector<Nat>& key) const {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (Nat v : key) {
      h ^= v;
      h *= 0x100000001B3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

// A total deterministic map from sorted r-tuples of naturals to points of a
// target space. Evaluations are memoized per function value; the oracle
// budget is charged once per distinct tuple.
class TupleFunction {
 public:
  using Rule = std::function<Point(std::span<const Nat>)>;

  TupleFunction(std::string label, unsigned arity, Space target, Rule rule);

  const Point& eval(std::span<const Nat> tuple, FuelMeter& meter) const;
  // Re-runs the rule without consulting the cache; used by verifiers.
  Point eval_fresh(std::span<const Nat> tuple) const;

  unsigned arity() const { return st_->arity; }
  const Space& target() const { return st_->target; }
  const std::string& label() const { return st_->label; }

 private:
  struct State {
    std::string label;
    unsigned arity;
    Space target;
    Rule rule;
    mutable std::unordered_map<std::vector<Nat>, Point, TupleKeyHash> memo;
  };
  std::shared_ptr<State> st_;

  void check_tuple(std::span<const Nat> tuple) const;
  Point run_rule(std::span<const Nat> tuple) const;
};

}  // namespace ramsey
