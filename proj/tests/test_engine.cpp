#include <doctest.h>

#include "ramsey/dsl.hpp"
#include "ramsey/engine.hpp"
#include "ramsey/fixtures.hpp"
#include "ramsey/json_io.hpp"
#include "test_helpers.hpp"

using namespace ramsey;
using ramsey::testing::dy;

namespace {

ExtractOptions small_opts(std::uint32_t levels = 4, std::size_t prefix = 16) {
  ExtractOptions opt;
  opt.max_level = levels;
  opt.prefix_len = prefix;
  return opt;
}

}  // namespace

TEST_CASE("min-decay extraction converges to zero and verifies") {
  TupleFunction f = builtin_fixture("min-decay");
  ExtractResult res = extract_convergent(f, NatStream::naturals(), small_opts());
  REQUIRE(res.cert.limit_centers.size() == 5);
  CHECK(res.cert.limit_centers.back() == Point::cube({dy(0)}));
  for (const LevelClaim& claim : res.cert.levels) CHECK(claim.threshold <= claim.level);
  CHECK(verify_certificate(f, res.cert).ok);
}

TEST_CASE("constant functions certify with zero thresholds") {
  TupleFunction f = builtin_fixture("const(1/2)");
  ExtractResult res = extract_convergent(f, NatStream::naturals(), small_opts());
  for (std::size_t i = 0; i < res.cert.stream_prefix.size(); ++i)
    CHECK(res.cert.stream_prefix[i] == i);
  for (const LevelClaim& claim : res.cert.levels) CHECK(claim.threshold == 0);
  for (std::size_t n = 0; n < res.cert.limit_centers.size(); ++n)
    CHECK(distance(f.target(), res.cert.limit_centers[n], Point::cube({dy(1, 1)})) <=
          Dyadic::pow2neg(n));
  CHECK(verify_certificate(f, res.cert).ok);
}

TEST_CASE("mad-pair converges to the double point at infinity in the metrizable square") {
  TupleFunction f = builtin_fixture("mad-pair");
  ExtractResult res = extract_convergent(f, NatStream::naturals(), small_opts(5, 20));
  const Point inf2 = Point::tuple({Point::omega_infinity(), Point::omega_infinity()});
  CHECK(res.cert.limit_centers.back() == inf2);
  CHECK(verify_certificate(f, res.cert).ok);
}

TEST_CASE("verification catches tampered centers") {
  TupleFunction f = builtin_fixture("min-decay");
  ExtractResult res = extract_convergent(f, NatStream::naturals(), small_opts());
  ConvergenceCertificate bad = res.cert;
  bad.limit_centers.back() = Point::cube({dy(1, 1)});  // push the deepest center to 1/2
  VerifyReport report = verify_certificate(f, bad);
  CHECK_FALSE(report.ok);
  CHECK((!report.counterexample.empty() || report.level >= 0));
}

TEST_CASE("hand-built certificate for a constant function verifies") {
  TupleFunction f = builtin_fixture("const(1/2)");
  ConvergenceCertificate cert;
  cert.engine = "cover";
  cert.stream_prefix = {0, 1, 2, 3, 4, 5, 6, 7};
  for (std::uint32_t n = 0; n <= 3; ++n) {
    cert.limit_centers.push_back(Point::cube({dy(1, 1)}));
    cert.levels.push_back(LevelClaim{n, 0});
  }
  CHECK(verify_certificate(f, cert).ok);

  // raising thresholds monotonically keeps the certificate valid
  cert.levels[2].threshold = 2;
  cert.levels[3].threshold = 2;
  CHECK(verify_certificate(f, cert).ok);
  // breaking threshold monotonicity is rejected
  cert.levels[3].threshold = 1;
  CHECK_FALSE(verify_certificate(f, cert).ok);
}

TEST_CASE("the lifted-function certificate induces one for the original") {
  const std::vector<std::string> sources{
      "pow2neg(x0+1)", "(pow2neg(x0) + pow2neg(x1+1)) * pow2neg(1)",
      "max(pow2neg(x1), pow2neg(3))"};
  for (const std::string& src : sources) {
    TupleFunction g = dsl::make_tuple_function(src, 2, Space::unit_cube(1));
    TupleFunction f = lift(g);
    ExtractResult res = extract_convergent(f, NatStream::naturals(), small_opts(4, 14));
    REQUIRE(verify_certificate(f, res.cert).ok);
    ConvergenceCertificate derived = derive_lower_arity_certificate(res.cert);
    CHECK(verify_certificate(g, derived).ok);
  }
}

TEST_CASE("product extraction goes coordinatewise") {
  const Space line = Space::unit_cube(1);
  SUBCASE("three-fold product with a constant middle") {
    Space target = Space::product({line, line, line});
    TupleFunction f = dsl::make_tuple_function(
        "(pow2neg(x0), pow2neg(1), pow2neg(x1))", 2, target);
    ProductExtract res = extract_product(f, NatStream::naturals(), small_opts());
    const Point limit = res.product_cert.limit_centers.back();
    CHECK(limit.coordinate(target, 0) == Point::cube({dy(0)}));
    // located limits are ball centers: within 2^-4 of the true value 1/2
    CHECK(distance(line, limit.coordinate(target, 1), Point::cube({dy(1, 1)})) <=
          Dyadic::pow2neg(4));
    CHECK(limit.coordinate(target, 2) == Point::cube({dy(0)}));
    CHECK(verify_product_certificate(f, res.product_cert, res.coordinate_certs).ok);
  }
  SUBCASE("constant function into a countable product") {
    Space target = Space::omega_power(line);
    TupleFunction f = builtin_fixture("const((1/2))", 2, target);
    ProductExtract res = extract_product(f, NatStream::naturals(), small_opts());
    for (std::size_t i = 0; i < res.product_cert.stream_prefix.size(); ++i)
      CHECK(res.product_cert.stream_prefix[i] == i);
    CHECK(verify_product_certificate(f, res.product_cert, res.coordinate_certs).ok);
  }
  SUBCASE("mixed product needs the parity thinning") {
    Space target = Space::product({Space::omega_plus_one(), line});
    TupleFunction f = dsl::make_tuple_function("(x0, x0 mod 2)", 2, target);
    ProductExtract res = extract_product(f, NatStream::naturals(), small_opts(5, 18));
    const Point limit = res.product_cert.limit_centers.back();
    CHECK(limit.coordinate(target, 0) == Point::omega_infinity());
    CHECK(limit.coordinate(target, 1) == Point::cube({dy(0)}));
    CHECK(verify_product_certificate(f, res.product_cert, res.coordinate_certs).ok);
  }
}

TEST_CASE("inductive extraction") {
  SUBCASE("arity 1 reduces to plain sequential extraction") {
    TupleFunction f = builtin_fixture("min-decay", 1);
    ExtractResult res = inductive_extract(f, NatStream::naturals(), small_opts());
    CHECK(res.cert.engine == "inductive");
    CHECK(res.cert.limit_centers.back() == Point::cube({dy(0)}));
    CHECK(verify_certificate(f, res.cert).ok);
  }
  SUBCASE("sum-decay certifies over the dominated diagonal") {
    TupleFunction f = builtin_fixture("sum-decay");
    ExtractResult res = inductive_extract(f, NatStream::naturals(), small_opts(4, 14));
    CHECK(res.cert.engine == "inductive");
    CHECK(res.cert.limit_centers.back() == Point::cube({dy(0)}));
    CHECK(verify_certificate(f, res.cert).ok);
  }
  SUBCASE("constant functions pin every threshold at zero") {
    TupleFunction f = builtin_fixture("const(1/2)");
    ExtractResult res = inductive_extract(f, NatStream::naturals(), small_opts(3, 10));
    for (const LevelClaim& claim : res.cert.levels) CHECK(claim.threshold == 0);
    CHECK(verify_certificate(f, res.cert).ok);
  }
}

TEST_CASE("nice systems") {
  SUBCASE("sum-decay sections converge to the min-decay limits") {
    TupleFunction f = builtin_fixture("sum-decay");
    ExtractOptions opt = small_opts(5, 24);
    NiceSystem sys = extract_nice(f, NatStream::naturals(), opt);
    REQUIRE(sys.arity == 2);
    REQUIRE(!sys.cert.stream_prefix.empty());
    CHECK(verify_nice(f, sys).ok);

    // x_{k} within 2^-5 of 2^-(k+1) for the first materialized singletons
    const std::size_t probe = std::min<std::size_t>(8, sys.cert.stream_prefix.size());
    for (std::size_t i = 0; i < probe; ++i) {
      const Nat k = sys.cert.stream_prefix[i];
      const Point expected = Point::cube({Dyadic::pow2neg(k + 1)});
      const Point got = sys.sections[i].limit_centers.back();
      CHECK(distance(f.target(), got, expected) <= Dyadic::pow2neg(5));
    }

    // the induced limit system is 1-nice (plain convergent certificate)
    REQUIRE(sys.g_system);
    CHECK(sys.g_system->arity == 1);
    CHECK(sys.g_system->sections.empty());

    // coherence: top limits of f and g agree level by level within 2*2^-n
    const std::size_t depth =
        std::min(sys.cert.limit_centers.size(), sys.g_system->cert.limit_centers.size());
    for (std::size_t n = 0; n < depth; ++n)
      CHECK(distance(f.target(), sys.cert.limit_centers[n],
                     sys.g_system->cert.limit_centers[n]) <=
            Dyadic::pow2neg(n) + Dyadic::pow2neg(n));
  }

  SUBCASE("constant functions are trivially nice") {
    TupleFunction f = builtin_fixture("const(1/2)");
    NiceSystem sys = extract_nice(f, NatStream::naturals(), small_opts(3, 14));
    CHECK(verify_nice(f, sys).ok);
    for (const auto& sec : sys.sections)
      CHECK(distance(f.target(), sec.limit_centers.back(), Point::cube({dy(1, 1)})) <=
            Dyadic::pow2neg(3));
  }

  SUBCASE("mad-pair sections converge to (k, infinity)") {
    TupleFunction f = builtin_fixture("mad-pair");
    NiceSystem sys = extract_nice(f, NatStream::naturals(), small_opts(5, 18));
    CHECK(verify_nice(f, sys).ok);
    const std::size_t probe = std::min<std::size_t>(4, sys.cert.stream_prefix.size());
    for (std::size_t i = 0; i < probe; ++i) {
      const Nat k = sys.cert.stream_prefix[i];
      if (k + 2 > 5) break;  // deeper than the cover resolves
      CHECK(sys.sections[i].limit_centers.back() ==
            Point::tuple({Point::omega(k), Point::omega_infinity()}));
    }
    REQUIRE(sys.g_system);
    CHECK(sys.g_system->cert.limit_centers.back() ==
          Point::tuple({Point::omega_infinity(), Point::omega_infinity()}));
  }
}

TEST_CASE("starved budgets interrupt with a partial certificate") {
  TupleFunction f = builtin_fixture("min-decay");
  ExtractOptions opt = small_opts();
  opt.fuel = Fuel{1, 1};
  try {
    extract_convergent(f, NatStream::naturals(), opt);
    FAIL("expected ExtractionInterrupted");
  } catch (const ExtractionInterrupted& e) {
    CHECK(e.partial.partial);
    CHECK(e.partial.engine == "cover");
    CHECK(verify_certificate(f, e.partial).ok);  // vacuous claims still verify
  }
}

TEST_CASE("extraction is deterministic across runs") {
  auto run = [] {
    TupleFunction f = builtin_fixture("sum-decay");
    ExtractResult res = extract_convergent(f, NatStream::naturals(), small_opts());
    return certificate_to_json(f.target(), res.cert).dump(2);
  };
  CHECK(run() == run());
}

TEST_CASE("options are validated") {
  TupleFunction f = builtin_fixture("min-decay");
  ExtractOptions opt;
  opt.max_level = 0;
  CHECK_THROWS_AS(extract_convergent(f, NatStream::naturals(), opt), ConfigError);
  opt.max_level = 6;
  opt.prefix_len = 3;
  CHECK_THROWS_AS(extract_convergent(f, NatStream::naturals(), opt), ConfigError);
  CHECK_THROWS_AS(
      extract_product(builtin_fixture("min-decay"), NatStream::naturals(), small_opts()),
      ConfigError);
}
