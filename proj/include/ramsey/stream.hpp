#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/fuel.hpp"

namespace ramsey {

using Nat = std::uint64_t;

// Lazily materialized, strictly increasing sequence of naturals — the
// stand-in for an infinite subset of N. The generator is deterministic in
// the materialized prefix, so rebuilding a stream the same way reproduces
// the same elements. Copies share state: a stream is single-owner while it
// materializes, and produced prefixes never change.
class NatStream {
 public:
  // Next element (strictly greater than the prefix's last), or nullopt when
  // the stream is genuinely finite.
  using Generator =
      std::function<std::optional<Nat>(std::span<const Nat> prefix, FuelMeter&)>;

  NatStream(std::string label, Generator gen);

  static NatStream naturals();
  static NatStream arithmetic(Nat start, Nat step, std::string label = {});
  static NatStream from_vector(std::vector<Nat> elems, std::string label = "finite");
  // Elements of `base` satisfying `keep`, in order.
  static NatStream filter(NatStream base, std::function<bool(Nat, FuelMeter&)> keep,
                          std::string label);
  // Elements of `base` strictly greater than `bound`.
  static NatStream above(NatStream base, Nat bound);

  // First m elements; extends the prefix as needed.
  std::span<const Nat> materialize(std::size_t m, FuelMeter& meter);
  Nat at(std::size_t i, FuelMeter& meter);
  // Least materializable element strictly greater than `bound` (or the first
  // element when bound is nullopt).
  Nat least_above(std::optional<Nat> bound, FuelMeter& meter);
  // Materializes until the prefix reaches v; true iff v is an element.
  bool contains(Nat v, FuelMeter& meter);

  std::span<const Nat> prefix() const { return st_->prefix; }
  std::uint64_t fuel_spent() const { return st_->produced; }
  const std::string& label() const { return st_->label; }

 private:
  struct State {
    std::string label;
    Generator gen;
    std::vector<Nat> prefix;
    std::uint64_t produced = 0;
  };
  std::shared_ptr<State> st_;

  void produce_one(FuelMeter& meter);
};

// Greedy diagonal through a decreasing chain A_0 ⊇ A_1 ⊇ …: element n is the
// least member of A_min(n, len-1) above element n-1, so (result ∖ A_n) is
// contained in the result's first n elements, exactly. Every selected
// element is checked against all earlier chain entries; a missing element
// surfaces as ChainViolation.
NatStream pseudo_intersection(std::vector<NatStream> chain,
                              std::string label = "pseudo-intersection");

}  // namespace ramsey
