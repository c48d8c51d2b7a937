#include "ramsey/stream.hpp"

#include <algorithm>

#include "ramsey/big_stack.hpp"

namespace ramsey {

NatStream::NatStream(std::string label, Generator gen)
    : st_(std::make_shared<State>()) {
  st_->label = std::move(label);
  st_->gen = std::move(gen);
}

NatStream NatStream::naturals() { return arithmetic(0, 1, "nat"); }

NatStream NatStream::arithmetic(Nat start, Nat step, std::string label) {
  if (step == 0) throw ConfigError("arithmetic stream needs a positive step");
  if (label.empty())
    label = "arith(" + std::to_string(start) + "," + std::to_string(step) + ")";
  return NatStream(std::move(label),
                   [start, step](std::span<const Nat> prefix, FuelMeter&) {
                     return std::optional<Nat>(
                         prefix.empty() ? start : prefix.back() + step);
                   });
}

NatStream NatStream::from_vector(std::vector<Nat> elems, std::string label) {
  for (std::size_t i = 1; i < elems.size(); ++i)
    if (elems[i] <= elems[i - 1])
      throw ConfigError("from_vector: elements must be strictly increasing");
  return NatStream(std::move(label),
                   [elems = std::move(elems)](std::span<const Nat> prefix,
                                              FuelMeter&) -> std::optional<Nat> {
                     if (prefix.size() >= elems.size()) return std::nullopt;
                     return elems[prefix.size()];
                   });
}

NatStream NatStream::filter(NatStream base, std::function<bool(Nat, FuelMeter&)> keep,
                            std::string label) {
  auto cursor = std::make_shared<std::size_t>(0);
  return NatStream(std::move(label),
                   [base, keep = std::move(keep), cursor](
                       std::span<const Nat>, FuelMeter& meter) mutable
                       -> std::optional<Nat> {
                     for (;;) {
                       Nat v = base.at(*cursor, meter);
                       ++*cursor;
                       if (keep(v, meter)) return v;
                     }
                   });
}

NatStream NatStream::above(NatStream base, Nat bound) {
  auto cursor = std::make_shared<std::size_t>(0);
  std::string label = base.label() + ">" + std::to_string(bound);
  return NatStream(std::move(label),
                   [base, bound, cursor](std::span<const Nat>,
                                         FuelMeter& meter) mutable
                       -> std::optional<Nat> {
                     for (;;) {
                       Nat v = base.at(*cursor, meter);
                       ++*cursor;
                       if (v > bound) return v;
                     }
                   });
}

void NatStream::produce_one(FuelMeter& meter) {
  if (st_->produced >= meter.limits().max_materialize)
    throw FuelExhausted("stream '" + st_->label + "' hit its materialization budget",
                        "stream", st_->produced, meter.limits().max_materialize);
  std::optional<Nat> v = st_->gen(st_->prefix, meter);
  if (!v)
    throw FuelExhausted("stream '" + st_->label + "' is finite and exhausted",
                        "stream-end", st_->produced, st_->produced);
  if (!st_->prefix.empty() && *v <= st_->prefix.back())
    throw Error("stream '" + st_->label + "' generator is not strictly increasing");
  st_->prefix.push_back(*v);
  ++st_->produced;
}

std::span<const Nat> NatStream::materialize(std::size_t m, FuelMeter& meter) {
  // A cache miss recurses through every layer of a derived stream's chain.
  detail::with_big_stack([&] {
    while (st_->prefix.size() < m) produce_one(meter);
  });
  return {st_->prefix.data(), m};
}

Nat NatStream::at(std::size_t i, FuelMeter& meter) {
  while (st_->prefix.size() <= i) produce_one(meter);
  return st_->prefix[i];
}

Nat NatStream::least_above(std::optional<Nat> bound, FuelMeter& meter) {
  if (!bound) return at(0, meter);
  // Search the cached prefix first, then extend.
  auto it = std::upper_bound(st_->prefix.begin(), st_->prefix.end(), *bound);
  if (it != st_->prefix.end()) return *it;
  for (;;) {
    produce_one(meter);
    if (st_->prefix.back() > *bound) return st_->prefix.back();
  }
}

bool NatStream::contains(Nat v, FuelMeter& meter) {
  while (st_->prefix.empty() || st_->prefix.back() < v) produce_one(meter);
  return std::binary_search(st_->prefix.begin(), st_->prefix.end(), v);
}

NatStream pseudo_intersection(std::vector<NatStream> chain, std::string label) {
  if (chain.empty()) throw ConfigError("pseudo_intersection needs a nonempty chain");
  return NatStream(
      std::move(label),
      [chain = std::move(chain)](std::span<const Nat> prefix,
                                 FuelMeter& meter) mutable -> std::optional<Nat> {
        const std::size_t idx = std::min(prefix.size(), chain.size() - 1);
        std::optional<Nat> bound;
        if (!prefix.empty()) bound = prefix.back();
        Nat v = chain[idx].least_above(bound, meter);
        for (std::size_t m = 0; m < idx; ++m) {
          if (!chain[m].contains(v, meter))
            throw ChainViolation("chain inclusion violated: " + std::to_string(v) +
                                 " selected from entry " + std::to_string(idx) +
                                 " is missing from entry " + std::to_string(m));
        }
        return v;
      });
}

}  // namespace ramsey
