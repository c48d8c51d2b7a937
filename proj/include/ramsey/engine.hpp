#pragma once

#include <memory>

#include "ramsey/certificate.hpp"
#include "ramsey/ramsey.hpp"

namespace ramsey {

struct ExtractOptions {
  std::uint32_t max_level = 6;  // certify levels 0..max_level
  std::size_t prefix_len = 32;  // materialized stream length
  Fuel fuel;

  // Pigeonhole commit target: first color class to recur this often wins.
  std::size_t pigeonhole_target() const { return prefix_len + max_level + 4; }

  void validate(unsigned arity) const;
};

// Thrown when fuel runs out mid-extraction; carries whatever certificate the
// completed part of the construction supports (marked partial).
struct ExtractionInterrupted : FuelExhausted {
  ExtractionInterrupted(const FuelExhausted& cause, ConvergenceCertificate cert)
      : FuelExhausted(cause), partial(std::move(cert)) {}
  ConvergenceCertificate partial;
};

struct ExtractResult {
  ConvergenceCertificate cert;
  NatStream stream;
};

// The main extractor: for each level n, cover the target by 2^-n balls,
// Ramsey-extract a stream monochromatic for the induced coloring, and
// pseudo-intersect the chain. Thresholds are minimized afterwards.
ExtractResult extract_convergent(const TupleFunction& f, NatStream base,
                                 const ExtractOptions& opt,
                                 FuelMeterPtr meter = nullptr);

// f(s) = g(s with its maximum removed): lifts an (r-1)-ary function to
// arity r.
TupleFunction lift(const TupleFunction& g);

struct ProductExtract {
  ConvergenceCertificate product_cert;
  std::vector<ConvergenceCertificate> coordinate_certs;
  NatStream stream;
};

// Coordinatewise extraction for product targets: thin a chain B_0 ⊇ B_1 ⊇ …
// making each projection converge, pseudo-intersect, and assemble the
// product limit from the coordinate limits.
ProductExtract extract_product(const TupleFunction& f, NatStream base,
                               const ExtractOptions& opt, FuelMeterPtr meter = nullptr);

VerifyReport verify_product_certificate(const TupleFunction& f,
                                        const ConvergenceCertificate& product_cert,
                                        const std::vector<ConvergenceCertificate>& coords);

// Alternative extractor by induction on the arity: pick a_0 < a_1 < … with
// nested streams so that f({a_n} ∪ ·) converges to p_n, thin {p_n} to a
// convergent subsequence with limit p, then dominate the per-neighborhood
// tail bounds with an increasing diagonal through the stream.
ExtractResult inductive_extract(const TupleFunction& f, NatStream base,
                                const ExtractOptions& opt, FuelMeterPtr meter = nullptr);

// A convergence certificate together with, recursively, limits for every
// one-point extension of every (r-1)-subset of the stream.
struct NiceSystem {
  unsigned arity = 1;
  ConvergenceCertificate cert;
  struct Section {
    std::vector<Nat> tuple;
    LocatedLimit limit_centers;
    std::vector<LevelClaim> levels;
  };
  std::vector<Section> sections;           // empty for arity 1
  std::shared_ptr<NiceSystem> g_system;    // null for arity 1

  // The values of the induced limit function g(s) = x_s, one per section,
  // taken at the deepest certified level.
  TupleFunction section_limit_function(const Space& target) const;
};

NiceSystem extract_nice(const TupleFunction& f, NatStream base,
                        const ExtractOptions& opt, FuelMeterPtr meter = nullptr);

VerifyReport verify_nice(const TupleFunction& f, const NiceSystem& sys);

}  // namespace ramsey
