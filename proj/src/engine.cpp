#include "ramsey/engine.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include "ramsey/big_stack.hpp"

namespace ramsey {

void ExtractOptions::validate(unsigned arity) const {
  if (max_level == 0) throw ConfigError("max level must be at least 1");
  if (arity == 0) throw ConfigError("arity must be positive");
  if (prefix_len < std::size_t(max_level) + arity)
    throw ConfigError("prefix length must be at least max_level + arity");
  fuel.validate();
}

namespace {

FuelReport make_report(const ExtractOptions& opt, const FuelMeter& meter,
                       std::size_t target, std::uint32_t deepest, std::string note) {
  FuelReport rep;
  rep.oracle_calls = meter.oracle_calls();
  rep.oracle_budget = opt.fuel.max_oracle_calls;
  rep.stream_budget = opt.fuel.max_materialize;
  rep.pigeonhole_target = target;
  rep.deepest_level = deepest;
  rep.note = std::move(note);
  return rep;
}

// Drops trailing centers that break the Cauchy modulus; a full extraction
// never trips this, but a starved partial run can pair centers that were
// never co-verified on common tuples.
void truncate_to_cauchy(const Space& sp, LocatedLimit& centers) {
  for (std::size_t n = 0; n + 1 < centers.size(); ++n) {
    const Dyadic bound = Dyadic::pow2neg(n) + Dyadic::pow2neg(n + 1);
    if (distance(sp, centers[n], centers[n + 1]) > bound) {
      centers.resize(n + 1);
      return;
    }
  }
}

std::string exhaustion_note(const FuelExhausted& fe) {
  std::string s = fe.domain + ": " + fe.what();
  if (!fe.context.empty()) s += " (" + fe.context + ")";
  return s;
}

}  // namespace

ExtractResult extract_convergent(const TupleFunction& f, NatStream base,
                                 const ExtractOptions& opt, FuelMeterPtr meter) {
  if (!detail::on_big_stack())
    return detail::with_big_stack(
        [&] { return extract_convergent(f, base, opt, meter); });
  opt.validate(f.arity());
  if (!meter) meter = make_meter(opt.fuel);
  const std::size_t target = opt.pigeonhole_target();

  std::vector<NatStream> chain;
  LocatedLimit centers;
  NatStream current = base;
  std::optional<FuelExhausted> interrupted;

  for (std::uint32_t n = 0; n <= opt.max_level; ++n) {
    try {
      CoverLevel cov = cover(f.target(), n);
      RamseyExtract rec =
          infinite_ramsey_extract(induced_coloring(f, cov), current, meter, target);
      centers.push_back(cov.center(rec.color));
      chain.push_back(rec.stream);
      current = rec.stream;
    } catch (const FuelExhausted& fe) {
      interrupted = fe;
      break;
    }
  }

  NatStream stream = chain.empty() ? base : pseudo_intersection(chain);
  std::vector<Nat> prefix;
  if (!chain.empty()) {
    if (!interrupted) {
      try {
        auto got = stream.materialize(opt.prefix_len, *meter);
        prefix.assign(got.begin(), got.end());
      } catch (const FuelExhausted& fe) {
        interrupted = fe;
      }
    }
    if (interrupted) {
      auto got = stream.prefix();
      prefix.assign(got.begin(), got.end());
      if (prefix.size() > opt.prefix_len) prefix.resize(opt.prefix_len);
    }
  }

  truncate_to_cauchy(f.target(), centers);

  // Claim bookkeeping after an interruption must not consume more budget.
  FuelMeterPtr claim_meter = interrupted ? unlimited_meter() : meter;
  ConvergenceCertificate cert;
  cert.engine = "cover";
  cert.stream_prefix = std::move(prefix);
  cert.levels = minimize_thresholds(f, cert.stream_prefix, centers, *claim_meter);
  cert.limit_centers = std::move(centers);
  cert.partial = interrupted.has_value();
  const std::uint32_t deepest =
      cert.limit_centers.empty() ? 0
                                 : static_cast<std::uint32_t>(cert.limit_centers.size() - 1);
  cert.fuel_report = make_report(opt, *meter, target, deepest,
                                 interrupted ? exhaustion_note(*interrupted) : "");

  if (interrupted) throw ExtractionInterrupted(*interrupted, std::move(cert));
  return ExtractResult{std::move(cert), std::move(stream)};
}

TupleFunction lift(const TupleFunction& g) {
  return TupleFunction(
      "lift-of(" + g.label() + ")", g.arity() + 1, g.target(),
      [g](std::span<const Nat> s) {
        return g.eval_fresh(s.subspan(0, s.size() - 1));
      });
}

namespace {

TupleFunction coordinate_projection(const TupleFunction& f, std::size_t i) {
  const Space coord = f.target().coordinate_space(i);
  const Space target = f.target();
  return TupleFunction("pi" + std::to_string(i) + "." + f.label(), f.arity(), coord,
                       [f, target, i](std::span<const Nat> s) {
                         return f.eval_fresh(s).coordinate(target, i);
                       });
}

}  // namespace

ProductExtract extract_product(const TupleFunction& f, NatStream base,
                               const ExtractOptions& opt, FuelMeterPtr meter) {
  if (!detail::on_big_stack())
    return detail::with_big_stack(
        [&] { return extract_product(f, base, opt, meter); });
  opt.validate(f.arity());
  if (!f.target().is_product_like())
    throw ConfigError("extract_product needs a product target, got " +
                      f.target().descriptor());
  if (!meter) meter = make_meter(opt.fuel);

  std::size_t m = std::size_t(opt.max_level) + 1;
  if (f.target().kind() == Space::Kind::Product)
    m = std::min<std::size_t>(m, f.target().factors().size());

  std::vector<ConvergenceCertificate> coord_certs;
  std::vector<NatStream> chain;
  NatStream current = base;
  for (std::size_t i = 0; i < m; ++i) {
    TupleFunction pi = coordinate_projection(f, i);
    try {
      ExtractResult rec = extract_convergent(pi, current, opt, meter);
      coord_certs.push_back(std::move(rec.cert));
      chain.push_back(rec.stream);
      current = rec.stream;
    } catch (ExtractionInterrupted& fe) {
      // Assemble what the completed coordinates support.
      coord_certs.push_back(std::move(fe.partial));
      ConvergenceCertificate cert;
      cert.engine = "product";
      cert.partial = true;
      std::size_t depth = SIZE_MAX;
      for (const auto& cc : coord_certs) depth = std::min(depth, cc.levels.size());
      for (std::size_t n = 0; n < depth; ++n) {
        Point::TupleCoords cs;
        for (const auto& cc : coord_certs) cs.push_back(cc.limit_centers[n]);
        cert.limit_centers.push_back(Point::tuple(cs).normalized(f.target()));
        cert.levels.push_back(LevelClaim{static_cast<std::uint32_t>(n), 0});
      }
      truncate_to_cauchy(f.target(), cert.limit_centers);
      cert.levels.resize(cert.limit_centers.size());
      cert.fuel_report = make_report(opt, *meter, opt.pigeonhole_target(),
                                     cert.levels.empty() ? 0 : cert.levels.size() - 1,
                                     exhaustion_note(fe));
      throw ExtractionInterrupted(fe, std::move(cert));
    }
  }

  NatStream stream = pseudo_intersection(chain);
  std::vector<Nat> prefix;
  try {
    auto got = stream.materialize(opt.prefix_len, *meter);
    prefix.assign(got.begin(), got.end());
  } catch (FuelExhausted& fe) {
    auto got = stream.prefix();
    ConvergenceCertificate cert;
    cert.engine = "product";
    cert.partial = true;
    cert.stream_prefix.assign(got.begin(), got.end());
    cert.fuel_report =
        make_report(opt, *meter, opt.pigeonhole_target(), 0, exhaustion_note(fe));
    throw ExtractionInterrupted(fe, std::move(cert));
  }

  ConvergenceCertificate cert;
  cert.engine = "product";
  cert.stream_prefix = std::move(prefix);
  for (std::uint32_t n = 0; n <= opt.max_level; ++n) {
    Point::TupleCoords cs;
    for (std::size_t i = 0; i < m; ++i) cs.push_back(coord_certs[i].limit_centers[n]);
    if (f.target().kind() == Space::Kind::Product)
      for (std::size_t i = m; i < f.target().factors().size(); ++i)
        cs.push_back(f.target().factors()[i].basepoint());
    cert.limit_centers.push_back(Point::tuple(std::move(cs)).normalized(f.target()));
  }
  cert.levels = minimize_thresholds(f, cert.stream_prefix, cert.limit_centers, *meter);
  cert.fuel_report =
      make_report(opt, *meter, opt.pigeonhole_target(), opt.max_level, "");
  return ProductExtract{std::move(cert), std::move(coord_certs), std::move(stream)};
}

VerifyReport verify_product_certificate(const TupleFunction& f,
                                        const ConvergenceCertificate& product_cert,
                                        const std::vector<ConvergenceCertificate>& coords) {
  VerifyReport top = verify_certificate(f, product_cert);
  if (!top.ok) return top;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    TupleFunction pi = coordinate_projection(f, i);
    VerifyReport sub = verify_certificate(pi, coords[i]);
    if (!sub.ok) {
      sub.reason = "coordinate " + std::to_string(i) + ": " + sub.reason;
      return sub;
    }
  }
  // The assembled product centers must agree with the coordinate limits.
  for (std::size_t n = 0; n < product_cert.limit_centers.size(); ++n) {
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (n >= coords[i].limit_centers.size()) continue;
      const Point got = product_cert.limit_centers[n].coordinate(f.target(), i);
      const Point want =
          coords[i].limit_centers[n].normalized(f.target().coordinate_space(i));
      if (!(got == want))
        return VerifyReport::fail("product center disagrees with coordinate " +
                                      std::to_string(i) + " certificate",
                                  {}, static_cast<std::int64_t>(n));
    }
  }
  return VerifyReport::pass();
}

// ---------------------------------------------------------------------------
// Inductive extractor

namespace {

// Lazily built tower: a_n, nested streams A_n, and limits p_n of the induced
// (r-1)-ary functions f({a_n} ∪ ·) over A_{n+1}.
struct InductiveTower {
  TupleFunction f;
  ExtractOptions inner;
  FuelMeterPtr meter;
  std::vector<Nat> a;
  std::vector<NatStream> streams;  // streams[0] = base, streams[n+1] = A_{n+1}
  std::vector<Point> limits;       // limits[n] = p_n (deepest certified center)

  void ensure(std::size_t n);
};

void InductiveTower::ensure(std::size_t n) {
  while (limits.size() <= n) {
    const std::size_t k = limits.size();
    if (a.size() == k) a.push_back(streams[k].at(0, *meter));
    const Nat a_k = a[k];
    TupleFunction f_a(f.label() + "|min=" + std::to_string(a_k), f.arity() - 1,
                      f.target(), [f = f, a_k](std::span<const Nat> s) {
                        std::vector<Nat> t;
                        t.reserve(s.size() + 1);
                        t.push_back(a_k);
                        t.insert(t.end(), s.begin(), s.end());
                        return f.eval_fresh(t);
                      });
    ExtractResult rec =
        inductive_extract(f_a, NatStream::above(streams[k], a_k), inner, meter);
    streams.push_back(rec.stream);
    limits.push_back(rec.cert.limit_centers.back());
    a.push_back(streams.back().at(0, *meter));
  }
}

}  // namespace

ExtractResult inductive_extract(const TupleFunction& f, NatStream base,
                                const ExtractOptions& opt, FuelMeterPtr meter) {
  if (!detail::on_big_stack())
    return detail::with_big_stack(
        [&] { return inductive_extract(f, base, opt, meter); });
  opt.validate(f.arity());
  if (!meter) meter = make_meter(opt.fuel);

  if (f.arity() == 1) {
    ExtractResult res = extract_convergent(f, std::move(base), opt, meter);
    res.cert.engine = "inductive";
    return res;
  }

  ExtractOptions inner = opt;
  inner.max_level = opt.max_level + 1;
  inner.prefix_len = std::max<std::size_t>(std::size_t(inner.max_level) + f.arity(), 12);

  auto tower = std::make_shared<InductiveTower>(
      InductiveTower{f, inner, meter, {}, {std::move(base)}, {}});

  try {
    // Thin {p_n} to a convergent subsequence with limit p.
    TupleFunction limit_seq(
        "limits(" + f.label() + ")", 1, f.target(),
        [tower](std::span<const Nat> s) {
          tower->ensure(s[0]);
          return tower->limits[s[0]];
        });
    ExtractOptions mopt = opt;
    mopt.max_level = opt.max_level + 1;
    mopt.prefix_len = std::max<std::size_t>(opt.prefix_len,
                                            std::size_t(mopt.max_level) + 2);
    ExtractResult mrec =
        extract_convergent(limit_seq, NatStream::naturals(), mopt, meter);
    const LocatedLimit& located = mrec.cert.limit_centers;

    // Re-enumerate so the selected index set reads as 0,1,2,…: B lists the
    // diagonal elements a_n along the thinned index stream.
    NatStream m_stream = mrec.stream;
    NatStream b_stream(
        "inductive-B(" + f.label() + ")",
        [tower, m_stream, cursor = std::size_t(0)](
            std::span<const Nat>, FuelMeter& fm) mutable -> std::optional<Nat> {
          const Nat idx = m_stream.at(cursor++, fm);
          tower->ensure(idx);
          return tower->a[idx];
        });

    // m(U_i): from this index on, every listed limit lies in the 2^-i ball
    // around the located center.
    std::vector<std::size_t> ball_start(located.size(), 0);
    for (const LevelClaim& claim : mrec.cert.levels)
      ball_start[claim.level] = claim.threshold;

    // phi_{U_i}(j): least value bound making every materialized r-subset with
    // minimum B[j] and remaining elements >= the bound land in U_i.
    const unsigned r = f.arity();
    auto phi = [&](std::size_t i, std::size_t j, std::size_t horizon) -> Nat {
      Nat bound = 0;
      std::vector<Nat> bp(b_stream.prefix().begin(), b_stream.prefix().end());
      if (bp.size() > horizon) bp.resize(horizon);
      if (j >= bp.size()) return 0;
      for (CombinationIter it(bp.size() - j - 1, r - 1); it.valid(); it.next()) {
        std::vector<Nat> tuple{bp[j]};
        for (std::size_t pos : it.positions()) tuple.push_back(bp[j + 1 + pos]);
        if (distance(f.target(), f.eval(tuple, *meter), located[i]) >
            Dyadic::pow2neg(i))
          bound = std::max(bound, tuple[1] + 1);
      }
      return bound;
    };

    // The dominating diagonal psi through B.
    std::vector<Nat> c_vals;
    std::optional<Nat> prev;
    for (std::size_t j = 0; j < opt.prefix_len; ++j) {
      const std::size_t horizon = j + r + 8;
      b_stream.materialize(horizon, *meter);
      Nat need = 0;
      for (std::size_t i = 0; i < located.size() && i <= j; ++i) {
        if (j < ball_start[i]) continue;
        need = std::max(need, phi(i, j, horizon));
      }
      Nat bound = need + 1;
      Nat lo = bound == 0 ? 0 : bound - 1;
      if (prev) lo = std::max(lo, *prev);
      const Nat psi = b_stream.least_above(lo, *meter);
      c_vals.push_back(psi);
      prev = psi;
    }

    ConvergenceCertificate cert;
    cert.engine = "inductive";
    cert.stream_prefix = c_vals;
    // Claim level n with the level n+1 center: the immediate-successor ball
    // absorbs the inner towers' own approximation radius.
    cert.limit_centers.assign(located.begin() + 1, located.end());
    truncate_to_cauchy(f.target(), cert.limit_centers);
    cert.levels =
        minimize_thresholds(f, cert.stream_prefix, cert.limit_centers, *meter);
    cert.fuel_report = make_report(opt, *meter, opt.pigeonhole_target(),
                                   cert.limit_centers.empty()
                                       ? 0
                                       : cert.limit_centers.size() - 1,
                                   "");
    return ExtractResult{std::move(cert),
                         NatStream::from_vector(std::move(c_vals),
                                                "inductive-C(" + f.label() + ")")};
  } catch (const ExtractionInterrupted& fe) {
    ConvergenceCertificate cert = fe.partial;
    cert.engine = "inductive";
    cert.partial = true;
    throw ExtractionInterrupted(fe, std::move(cert));
  } catch (const FuelExhausted& fe) {
    ConvergenceCertificate cert;
    cert.engine = "inductive";
    cert.partial = true;
    cert.fuel_report =
        make_report(opt, *meter, opt.pigeonhole_target(), 0, exhaustion_note(fe));
    throw ExtractionInterrupted(fe, std::move(cert));
  }
}

// ---------------------------------------------------------------------------
// Nice systems

TupleFunction NiceSystem::section_limit_function(const Space& target) const {
  auto table = std::make_shared<std::map<std::vector<Nat>, Point>>();
  for (const Section& s : sections) {
    if (s.limit_centers.empty())
      throw Error("nice system section has no certified limit");
    table->emplace(s.tuple, s.limit_centers.back());
  }
  return TupleFunction(
      "section-limits", arity - 1, target,
      [table](std::span<const Nat> s) {
        auto it = table->find(std::vector<Nat>(s.begin(), s.end()));
        if (it == table->end())
          throw Error("section limit requested for a tuple outside the system");
        return it->second;
      });
}

namespace {

NiceSystem::Section section_claims(const TupleFunction& f, const std::vector<Nat>& prefix,
                                   const std::vector<Nat>& tuple,
                                   const LocatedLimit& limit, FuelMeter& meter) {
  NiceSystem::Section sec;
  sec.tuple = tuple;
  sec.limit_centers = limit;
  std::vector<std::size_t> violation(limit.size(), 0);
  for (std::size_t pos = 0; pos < prefix.size(); ++pos) {
    const Nat e = prefix[pos];
    if (std::binary_search(tuple.begin(), tuple.end(), e)) continue;
    std::vector<Nat> t = tuple;
    t.insert(std::upper_bound(t.begin(), t.end(), e), e);
    const Point& value = f.eval(t, meter);
    for (std::size_t n = 0; n < limit.size(); ++n)
      if (distance(f.target(), value, limit[n]) > Dyadic::pow2neg(n))
        violation[n] = std::max(violation[n], pos + 1);
  }
  std::size_t floor_threshold = 0;
  for (std::size_t n = 0; n < limit.size(); ++n) {
    floor_threshold = std::max(floor_threshold, violation[n]);
    sec.levels.push_back(LevelClaim{static_cast<std::uint32_t>(n), floor_threshold});
  }
  return sec;
}

}  // namespace

NiceSystem extract_nice(const TupleFunction& f, NatStream base,
                        const ExtractOptions& opt, FuelMeterPtr meter) {
  if (!detail::on_big_stack())
    return detail::with_big_stack(
        [&] { return extract_nice(f, base, opt, meter); });
  opt.validate(f.arity());
  if (!meter) meter = make_meter(opt.fuel);
  const unsigned r = f.arity();

  ExtractResult res = extract_convergent(f, std::move(base), opt, meter);
  if (r == 1) {
    res.cert.engine = "nice";
    NiceSystem sys;
    sys.arity = 1;
    sys.cert = std::move(res.cert);
    return sys;
  }

  const std::vector<Nat>& bprefix = res.cert.stream_prefix;

  // One convergence extraction per (r-1)-subset of the certified prefix, each
  // thinning the previous stream; their limits are the section limits x_s.
  ExtractOptions sect = opt;
  sect.prefix_len = std::max<std::size_t>(std::size_t(opt.max_level) + 2, 12);

  std::map<std::vector<Nat>, LocatedLimit> section_limits;
  std::vector<NatStream> chain;
  NatStream current = res.stream;
  for (CombinationIter it(bprefix.size(), r - 1); it.valid(); it.next()) {
    std::vector<Nat> s;
    for (std::size_t pos : it.positions()) s.push_back(bprefix[pos]);
    TupleFunction h_s(
        "section(" + f.label() + ")", 1, f.target(),
        [f, s](std::span<const Nat> n) {
          std::vector<Nat> t = s;
          t.insert(std::upper_bound(t.begin(), t.end(), n[0]), n[0]);
          return f.eval_fresh(t);
        });
    NatStream dom = NatStream::filter(
        current,
        [s](Nat v, FuelMeter&) { return !std::binary_search(s.begin(), s.end(), v); },
        "minus-" + std::to_string(s.size()) + "-tuple");
    ExtractResult rec = extract_convergent(h_s, dom, sect, meter);
    section_limits.emplace(std::move(s), rec.cert.limit_centers);
    chain.push_back(rec.stream);
    current = rec.stream;
  }

  NatStream thinned = pseudo_intersection(chain, "nice-pseudo-intersection");
  thinned.materialize(opt.prefix_len, *meter);
  std::vector<Nat> tprefix;
  for (Nat v : thinned.prefix()) {
    if (v > bprefix.back()) break;  // stay inside the enumerated section range
    tprefix.push_back(v);
  }
  if (tprefix.size() < std::size_t(opt.max_level) + r)
    throw FuelExhausted("nice extraction: thinned stream left too few elements",
                        "stream", tprefix.size(), opt.prefix_len);

  // Recurse on the induced limit function g(s) = x_s over the thinned stream.
  NiceSystem draft;
  draft.arity = r;
  for (CombinationIter it(tprefix.size(), r - 1); it.valid(); it.next()) {
    std::vector<Nat> s;
    for (std::size_t pos : it.positions()) s.push_back(tprefix[pos]);
    draft.sections.push_back(
        NiceSystem::Section{s, section_limits.at(s), {}});
  }
  TupleFunction g = draft.section_limit_function(f.target());

  ExtractOptions gopt = opt;
  // The recursion runs over a finite stream; leave headroom for the
  // pigeonhole scans and the diagonal selection.
  const std::size_t headroom = 2 * std::size_t(opt.max_level) + 6;
  const std::size_t usable = tprefix.size() > headroom ? tprefix.size() - headroom : 0;
  gopt.prefix_len = std::max<std::size_t>(std::size_t(opt.max_level) + r - 1,
                                          std::min<std::size_t>(usable, 12));
  NiceSystem g_sys = extract_nice(g, NatStream::from_vector(tprefix, "nice-thinned"),
                                  gopt, meter);
  const std::vector<Nat>& final_prefix = g_sys.cert.stream_prefix;

  // Re-base the top certificate and the section claims onto the final stream.
  NiceSystem sys;
  sys.arity = r;
  sys.cert = std::move(res.cert);
  sys.cert.engine = "nice";
  sys.cert.stream_prefix = final_prefix;
  sys.cert.levels =
      minimize_thresholds(f, sys.cert.stream_prefix, sys.cert.limit_centers, *meter);
  for (CombinationIter it(final_prefix.size(), r - 1); it.valid(); it.next()) {
    std::vector<Nat> s;
    for (std::size_t pos : it.positions()) s.push_back(final_prefix[pos]);
    sys.sections.push_back(
        section_claims(f, final_prefix, s, section_limits.at(s), *meter));
  }
  sys.g_system = std::make_shared<NiceSystem>(std::move(g_sys));
  return sys;
}

VerifyReport verify_nice(const TupleFunction& f, const NiceSystem& sys) {
  if (f.arity() != sys.arity)
    return VerifyReport::fail("nice system arity disagrees with the function");
  VerifyReport top = verify_certificate(f, sys.cert);
  if (!top.ok) return top;

  if (sys.arity == 1) {
    if (!sys.sections.empty() || sys.g_system)
      return VerifyReport::fail("a 1-nice system must have no sections");
    return VerifyReport::pass();
  }

  const std::vector<Nat>& prefix = sys.cert.stream_prefix;
  const unsigned r = sys.arity;

  std::size_t idx = 0;
  for (CombinationIter it(prefix.size(), r - 1); it.valid(); it.next(), ++idx) {
    if (idx >= sys.sections.size())
      return VerifyReport::fail("missing sections for some subsets of the stream");
    const NiceSystem::Section& sec = sys.sections[idx];
    std::vector<Nat> expect;
    for (std::size_t pos : it.positions()) expect.push_back(prefix[pos]);
    if (sec.tuple != expect)
      return VerifyReport::fail("sections are not the enumeration of the stream's subsets",
                                expect);
    if (sec.levels.size() != sec.limit_centers.size())
      return VerifyReport::fail("section levels and centers disagree", sec.tuple);
    for (std::size_t n = 0; n < sec.limit_centers.size(); ++n) {
      if (!f.target().contains(sec.limit_centers[n]))
        return VerifyReport::fail("section limit outside the target space", sec.tuple,
                                  static_cast<std::int64_t>(n));
      if (n + 1 < sec.limit_centers.size()) {
        const Dyadic bound = Dyadic::pow2neg(n) + Dyadic::pow2neg(n + 1);
        if (distance(f.target(), sec.limit_centers[n], sec.limit_centers[n + 1]) > bound)
          return VerifyReport::fail("section limit violates the Cauchy modulus",
                                    sec.tuple, static_cast<std::int64_t>(n));
      }
    }
    for (std::size_t pos = 0; pos < prefix.size(); ++pos) {
      const Nat e = prefix[pos];
      if (std::binary_search(sec.tuple.begin(), sec.tuple.end(), e)) continue;
      std::vector<Nat> t = sec.tuple;
      t.insert(std::upper_bound(t.begin(), t.end(), e), e);
      const Point value = f.eval_fresh(t);
      for (const LevelClaim& claim : sec.levels) {
        if (pos < claim.threshold) continue;
        if (distance(f.target(), value, sec.limit_centers[claim.level]) >
            Dyadic::pow2neg(claim.level))
          return VerifyReport::fail("section claim violated", t,
                                    static_cast<std::int64_t>(claim.level));
      }
    }
  }
  if (idx != sys.sections.size())
    return VerifyReport::fail("extra sections beyond the stream's subsets");

  if (!sys.g_system)
    return VerifyReport::fail("missing induced limit system");
  if (sys.g_system->cert.stream_prefix != prefix)
    return VerifyReport::fail("induced system lives on a different stream");
  TupleFunction g = sys.section_limit_function(f.target());
  VerifyReport sub = verify_nice(g, *sys.g_system);
  if (!sub.ok) {
    sub.reason = "induced system: " + sub.reason;
    return sub;
  }
  return VerifyReport::pass();
}

}  // namespace ramsey
