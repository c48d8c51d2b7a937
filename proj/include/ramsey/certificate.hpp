#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/space.hpp"
#include "ramsey/tuple_function.hpp"

namespace ramsey {

struct LevelClaim {
  std::uint32_t level = 0;
  std::size_t threshold = 0;  // min prefix position from which the claim holds
};

struct FuelReport {
  std::uint64_t oracle_calls = 0;
  std::uint64_t oracle_budget = 0;
  std::uint64_t stream_budget = 0;
  std::uint64_t pigeonhole_target = 0;  // first-to-target commit policy
  std::uint32_t deepest_level = 0;
  std::string note;
};

// Finite, independently checkable witness that f converges on the stream:
// for every listed level n, every r-subset s of the materialized prefix with
// min position >= threshold(n) satisfies d(f(s), center_n) <= 2^-n, and the
// centers form a located limit (consecutive centers within 2^-n + 2^-(n+1)).
struct ConvergenceCertificate {
  std::string engine;  // "cover" | "inductive" | "product" | "nice"
  std::vector<Nat> stream_prefix;
  LocatedLimit limit_centers;
  std::vector<LevelClaim> levels;
  FuelReport fuel_report;
  bool partial = false;
};

struct VerifyReport {
  bool ok = true;
  std::string reason;
  std::vector<Nat> counterexample;
  std::int64_t level = -1;

  static VerifyReport pass() { return VerifyReport{}; }
  static VerifyReport fail(std::string why, std::vector<Nat> tuple = {},
                           std::int64_t lvl = -1) {
    return VerifyReport{false, std::move(why), std::move(tuple), lvl};
  }
};

// Exhaustive re-check of every claim in the certificate against fresh
// evaluations of f (the memo cache is bypassed). Verification failure is a
// false report, not an error.
VerifyReport verify_certificate(const TupleFunction& f,
                                const ConvergenceCertificate& cert);

// Least valid thresholds for the given centers on the materialized prefix,
// then clamped to be nondecreasing in the level. `values` must hold f(s) for
// every r-subset s of the prefix, keyed by the subset's position tuple.
std::vector<LevelClaim> minimize_thresholds(const TupleFunction& f,
                                            const std::vector<Nat>& prefix,
                                            const LocatedLimit& centers,
                                            FuelMeter& meter);

// The projection step of the r => r-1 reduction: given a certificate for
// f(s) = g(s minus its max), produce the induced certificate for g over the
// same stream with the last element dropped (so every claim instance has a
// materialized witness tuple).
ConvergenceCertificate derive_lower_arity_certificate(const ConvergenceCertificate& cert);

// Enumerates r-subsets of [0, n) in lexicographic order.
class CombinationIter {
 public:
  CombinationIter(std::size_t n, std::size_t r);
  bool valid() const { return valid_; }
  const std::vector<std::size_t>& positions() const { return idx_; }
  void next();

 private:
  std::size_t n_, r_;
  std::vector<std::size_t> idx_;
  bool valid_;
};

}  // namespace ramsey
