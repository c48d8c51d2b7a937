#include "ramsey/tuple_function.hpp"

namespace ramsey {

TupleFunction::TupleFunction(std::string label, unsigned arity, Space target, Rule rule)
    : st_(std::make_shared<State>(State{std::move(label), arity, std::move(target),
                                        std::move(rule), {}})) {
  if (arity == 0) throw ConfigError("tuple function arity must be positive");
}

void TupleFunction::check_tuple(std::span<const Nat> tuple) const {
  if (tuple.size() != st_->arity)
    throw Error("tuple function '" + st_->label + "': arity mismatch");
  for (std::size_t i = 1; i < tuple.size(); ++i)
    if (tuple[i] <= tuple[i - 1])
      throw Error("tuple function '" + st_->label + "': tuple not strictly increasing");
}

Point TupleFunction::run_rule(std::span<const Nat> tuple) const {
  Point p = st_->rule(tuple).normalized(st_->target);
  if (!st_->target.contains(p))
    throw EvalError("tuple function '" + st_->label + "' produced a point outside " +
                    st_->target.descriptor());
  return p;
}

const Point& TupleFunction::eval(std::span<const Nat> tuple, FuelMeter& meter) const {
  check_tuple(tuple);
  std::vector<Nat> key(tuple.begin(), tuple.end());
  auto it = st_->memo.find(key);
  if (it != st_->memo.end()) return it->second;
  meter.charge_oracle();
  Point p = run_rule(tuple);
  return st_->memo.emplace(std::move(key), std::move(p)).first->second;
}

Point TupleFunction::eval_fresh(std::span<const Nat> tuple) const {
  check_tuple(tuple);
  return run_rule(tuple);
}

}  // namespace ramsey
