#pragma once

#include <cstdint>
#include <memory>

#include "ramsey/errors.hpp"

namespace ramsey {

// Budgets turning the infinite constructions into finite, reportable runs.
// `max_materialize` caps how many elements any single stream may produce;
// `max_oracle_calls` caps tuple-function evaluations per run. Hitting a
// budget is a distinct outcome (FuelExhausted), never silent truncation.
struct Fuel {
  std::uint64_t max_materialize = 100'000;
  std::uint64_t max_oracle_calls = 10'000'000;

  void validate() const {
    if (max_materialize == 0 || max_oracle_calls == 0)
      throw ConfigError("fuel budgets must be positive");
  }
};

class FuelMeter {
 public:
  explicit FuelMeter(Fuel f) : fuel_(f) { fuel_.validate(); }

  const Fuel& limits() const { return fuel_; }

  void charge_oracle() {
    if (oracle_calls_ >= fuel_.max_oracle_calls)
      throw FuelExhausted("oracle budget exhausted", "oracle", oracle_calls_,
                          fuel_.max_oracle_calls);
    ++oracle_calls_;
  }

  std::uint64_t oracle_calls() const { return oracle_calls_; }

 private:
  Fuel fuel_;
  std::uint64_t oracle_calls_ = 0;
};

using FuelMeterPtr = std::shared_ptr<FuelMeter>;

inline FuelMeterPtr make_meter(Fuel f) { return std::make_shared<FuelMeter>(f); }

// Verification and exact finite search are not fuel-limited.
inline FuelMeterPtr unlimited_meter() {
  return make_meter(Fuel{UINT64_MAX, UINT64_MAX});
}

}  // namespace ramsey
