#include "ramsey/certificate.hpp"

#include <algorithm>

namespace ramsey {

CombinationIter::CombinationIter(std::size_t n, std::size_t r)
    : n_(n), r_(r), idx_(r), valid_(r <= n && r > 0) {
  for (std::size_t i = 0; i < r; ++i) idx_[i] = i;
}

void CombinationIter::next() {
  std::size_t i = r_;
  while (i-- > 0) {
    if (idx_[i] != i + n_ - r_) {
      ++idx_[i];
      for (std::size_t j = i + 1; j < r_; ++j) idx_[j] = idx_[j - 1] + 1;
      return;
    }
  }
  valid_ = false;
}

VerifyReport verify_certificate(const TupleFunction& f,
                                const ConvergenceCertificate& cert) {
  const auto& prefix = cert.stream_prefix;
  for (std::size_t i = 1; i < prefix.size(); ++i)
    if (prefix[i] <= prefix[i - 1])
      return VerifyReport::fail("stream prefix is not strictly increasing");

  if (cert.levels.size() != cert.limit_centers.size())
    return VerifyReport::fail("levels and limit centers disagree in length");
  for (std::size_t i = 0; i < cert.levels.size(); ++i) {
    if (cert.levels[i].level != i)
      return VerifyReport::fail("level indices must be 0..L in order");
    if (i > 0 && cert.levels[i].threshold < cert.levels[i - 1].threshold)
      return VerifyReport::fail("thresholds must be nondecreasing", {},
                                static_cast<std::int64_t>(i));
  }

  const Space& target = f.target();
  for (std::size_t n = 0; n < cert.limit_centers.size(); ++n) {
    if (!target.contains(cert.limit_centers[n]))
      return VerifyReport::fail("limit center outside the target space", {},
                                static_cast<std::int64_t>(n));
    if (n + 1 < cert.limit_centers.size()) {
      const Dyadic bound = Dyadic::pow2neg(n) + Dyadic::pow2neg(n + 1);
      if (distance(target, cert.limit_centers[n], cert.limit_centers[n + 1]) > bound)
        return VerifyReport::fail("limit centers violate the Cauchy modulus", {},
                                  static_cast<std::int64_t>(n));
    }
  }

  const unsigned r = f.arity();
  for (CombinationIter it(prefix.size(), r); it.valid(); it.next()) {
    const auto& pos = it.positions();
    std::vector<Nat> tuple(r);
    for (unsigned i = 0; i < r; ++i) tuple[i] = prefix[pos[i]];
    const Point value = f.eval_fresh(tuple);
    for (const LevelClaim& claim : cert.levels) {
      if (pos.front() < claim.threshold) continue;
      if (distance(target, value, cert.limit_centers[claim.level]) >
          Dyadic::pow2neg(claim.level))
        return VerifyReport::fail("level claim violated", tuple,
                                  static_cast<std::int64_t>(claim.level));
    }
  }
  return VerifyReport::pass();
}

std::vector<LevelClaim> minimize_thresholds(const TupleFunction& f,
                                            const std::vector<Nat>& prefix,
                                            const LocatedLimit& centers,
                                            FuelMeter& meter) {
  const unsigned r = f.arity();
  const Space& target = f.target();
  // violation[n] = 1 + the largest min-position of an r-subset violating the
  // level-n ball bound (0 when none violate).
  std::vector<std::size_t> violation(centers.size(), 0);
  for (CombinationIter it(prefix.size(), r); it.valid(); it.next()) {
    const auto& pos = it.positions();
    std::vector<Nat> tuple(r);
    for (unsigned i = 0; i < r; ++i) tuple[i] = prefix[pos[i]];
    const Point& value = f.eval(tuple, meter);
    for (std::size_t n = 0; n < centers.size(); ++n) {
      if (distance(target, value, centers[n]) > Dyadic::pow2neg(n))
        violation[n] = std::max(violation[n], pos.front() + 1);
    }
  }
  std::vector<LevelClaim> claims(centers.size());
  std::size_t floor_threshold = 0;
  for (std::size_t n = 0; n < centers.size(); ++n) {
    floor_threshold = std::max(floor_threshold, violation[n]);
    claims[n] = LevelClaim{static_cast<std::uint32_t>(n), floor_threshold};
  }
  return claims;
}

ConvergenceCertificate derive_lower_arity_certificate(const ConvergenceCertificate& cert) {
  if (cert.stream_prefix.empty())
    throw Error("cannot derive a certificate from an empty prefix");
  ConvergenceCertificate derived = cert;
  derived.stream_prefix.pop_back();
  derived.fuel_report.note = "derived by dropping the lifted max coordinate";
  return derived;
}

}  // namespace ramsey
