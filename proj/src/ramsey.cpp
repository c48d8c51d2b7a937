#include "ramsey/ramsey.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "ramsey/big_stack.hpp"

namespace ramsey {

Coloring induced_coloring(const TupleFunction& f, const CoverLevel& cov) {
  auto memo =
      std::make_shared<std::unordered_map<std::vector<Nat>, Color, TupleKeyHash>>();
  return Coloring{
      f.arity(), cov.count(),
      [f, cov, memo](std::span<const Nat> s, FuelMeter& meter) -> Color {
        std::vector<Nat> key(s.begin(), s.end());
        auto it = memo->find(key);
        if (it != memo->end()) return it->second;
        Color col = cov.locate(f.eval(s, meter));
        memo->emplace(std::move(key), col);
        return col;
      },
      "locate@" + std::to_string(cov.level()) + "." + f.label()};
}

std::optional<HomogeneityWitness> find_homogeneous_exact(const Coloring& c, Nat N,
                                                         std::size_t m) {
  if (N < c.arity || m < c.arity)
    throw ConfigError("find_homogeneous_exact: need N, m >= arity");
  if (m > N) return std::nullopt;
  FuelMeterPtr meter = unlimited_meter();

  std::vector<Nat> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;

  std::vector<std::size_t> idx(c.arity);
  std::vector<Nat> tuple(c.arity);
  const unsigned r = c.arity;

  auto monochromatic = [&](const std::vector<Nat>& s) -> std::optional<Color> {
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    std::optional<Color> col;
    for (;;) {
      for (std::size_t i = 0; i < r; ++i) tuple[i] = s[idx[i]];
      Color got = c.rule(tuple, *meter);
      if (!col) col = got;
      else if (*col != got) return std::nullopt;
      // next r-combination of positions
      std::size_t i = r;
      while (i-- > 0) {
        if (idx[i] != i + s.size() - r) {
          ++idx[i];
          for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) return col;
      }
    }
  };

  // Lexicographic enumeration of m-subsets of [0,N): the first hit is the
  // lexicographically least witness.
  for (;;) {
    if (auto col = monochromatic(pick))
      return HomogeneityWitness{pick, *col, {}};
    std::size_t i = m;
    bool advanced = false;
    while (i-- > 0) {
      if (pick[i] != i + N - m) {
        ++pick[i];
        for (std::size_t j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
}

namespace {

Coloring prepend_min(const Coloring& c, Nat a) {
  return Coloring{
      c.arity - 1, c.palette,
      [rule = c.rule, a](std::span<const Nat> s, FuelMeter& m) -> Color {
        std::vector<Nat> t;
        t.reserve(s.size() + 1);
        t.push_back(a);
        t.insert(t.end(), s.begin(), s.end());
        return rule(t, m);
      },
      c.label + "|min=" + std::to_string(a)};
}

struct FiniteExtract {
  bool committed = false;
  Color color = 0;
  std::vector<Nat> h;      // monochromatic subset of the universe, in order
  bool saturated = false;  // stopped by the cap with more elements available
  std::string diagnostics; // live classes, for fuel-exhaustion reports
};

std::string counts_summary(const std::map<Color, std::size_t>& counts,
                           std::size_t scanned) {
  std::string s = "live classes {";
  bool first = true;
  for (const auto& [col, cnt] : counts) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(col) + ":" + std::to_string(cnt);
  }
  return s + "} after scanning " + std::to_string(scanned);
}

std::optional<Color> majority_color(const std::map<Color, std::size_t>& counts) {
  std::optional<Color> best;
  std::size_t best_count = 0;
  for (const auto& [col, cnt] : counts) {
    if (cnt > best_count) {
      best = col;
      best_count = cnt;
    }
  }
  return best;
}

// Pre-homogeneous extraction over a finite window of the base. The commit
// rule (first color class to reach the target, along the scan order) makes
// the result prefix-stable: extending the universe or raising the cap only
// extends the outputs, so window-doubling re-runs are consistent and, with
// memoized colorings, cheap.
//
// `majority` commits the most recurrent class when the (genuinely finite)
// universe is scanned in full without any class reaching the target.
FiniteExtract finite_extract(const Coloring& c, std::span<const Nat> universe,
                             FuelMeter& meter, std::size_t target,
                             std::size_t stage_target, std::size_t cap,
                             bool majority) {
  FiniteExtract out;
  if (cap == 0) cap = 1;

  if (c.arity == 1) {
    std::map<Color, std::size_t> counts;
    std::size_t scanned = 0;
    for (const Nat v : universe) {
      ++scanned;
      const Color col = c.rule(std::span<const Nat>(&v, 1), meter);
      if (++counts[col] == target) {
        out.committed = true;
        out.color = col;
        break;
      }
    }
    if (!out.committed) {
      if (majority) {
        if (auto col = majority_color(counts)) {
          out.committed = true;
          out.color = *col;
        }
      }
      if (!out.committed) {
        out.diagnostics = counts_summary(counts, scanned);
        return out;
      }
    }
    for (std::size_t i = 0; i < universe.size(); ++i) {
      const Nat v = universe[i];
      if (c.rule(std::span<const Nat>(&v, 1), meter) == out.color) {
        out.h.push_back(v);
        if (out.h.size() == cap) {
          out.saturated = i + 1 < universe.size();
          break;
        }
      }
    }
    return out;
  }

  // Staged construction: a_i = head of the current chain, which is then
  // thinned to a monochromatic set for the induced (r-1)-ary coloring. The
  // chain budget grows when a stage starved only because an earlier stage
  // was capped.
  for (std::size_t budget = std::max(cap, stage_target);; budget *= 2) {
    out = FiniteExtract{};
    std::vector<Nat> chain(universe.begin(), universe.end());
    std::vector<std::pair<Nat, Color>> staged;
    std::map<Color, std::size_t> counts;
    bool truncated = false;
    bool stuck = false;
    std::size_t have = 0;

    for (;;) {
      if (out.committed && have >= cap) break;
      if (chain.empty()) {
        stuck = true;
        break;
      }
      const Nat a = chain.front();
      const Coloring induced = prepend_min(c, a);
      FiniteExtract sub =
          finite_extract(induced, std::span<const Nat>(chain).subspan(1), meter,
                         stage_target, stage_target, budget, false);
      if (!sub.committed) {
        stuck = true;
        break;
      }
      truncated |= sub.saturated;
      staged.emplace_back(a, sub.color);
      if (!out.committed && ++counts[sub.color] == target) {
        out.committed = true;
        out.color = sub.color;
      }
      if (out.committed && sub.color == out.color) {
        // Count this stage and the ones committed before the color was known.
        have = 0;
        for (const auto& [sa, sj] : staged)
          if (sj == out.color) ++have;
      }
      chain = std::move(sub.h);
    }

    if (stuck && truncated && budget < universe.size()) continue;

    if (!out.committed && majority) {
      if (auto col = majority_color(counts)) {
        out.committed = true;
        out.color = *col;
      }
    }
    if (!out.committed) {
      out.h.clear();
      out.diagnostics = counts_summary(counts, staged.size());
      return out;
    }
    for (const auto& [a, j] : staged) {
      if (j == out.color) out.h.push_back(a);
      if (out.h.size() == cap) break;
    }
    out.saturated = !stuck && out.h.size() >= cap;
    return out;
  }
}

// Grows the base window geometrically until the extraction commits and the
// requested number of output elements exists.
struct RamseyRun {
  Coloring coloring;
  FuelMeterPtr meter;
  std::size_t target;
  std::size_t stage_target;
  NatStream base;
  std::size_t window;
  bool committed = false;
  bool base_ended = false;
  Color color = 0;
  std::vector<Nat> h;

  void ensure(std::size_t need) {
    if (committed && h.size() >= need) return;
    for (;;) {
      std::span<const Nat> universe;
      try {
        universe = base.materialize(window, *meter);
      } catch (const FuelExhausted& fe) {
        if (fe.domain != "stream-end") throw;
        base_ended = true;
        universe = base.prefix();
      }
      FiniteExtract got = finite_extract(coloring, universe, *meter, target,
                                         stage_target, std::max(need, target),
                                         base_ended);
      if (got.committed) {
        committed = true;
        color = got.color;
        h = std::move(got.h);
        if (h.size() >= need) return;
      }
      if (base_ended)
        throw FuelExhausted("extraction ran out of base elements", "stream-end",
                            h.size(), need,
                            got.diagnostics + " (base exhausted after " +
                                std::to_string(universe.size()) + " elements)");
      if (window >= meter->limits().max_materialize)
        throw FuelExhausted("extraction window hit the stream budget", "stream",
                            window, meter->limits().max_materialize, got.diagnostics);
      window = std::min<std::size_t>(window * 2, meter->limits().max_materialize);
    }
  }
};

}  // namespace

RamseyExtract infinite_ramsey_extract(const Coloring& c, NatStream base,
                                      const FuelMeterPtr& meter, std::size_t target,
                                      std::size_t stage_target) {
  if (!detail::on_big_stack())
    return detail::with_big_stack(
        [&] { return infinite_ramsey_extract(c, base, meter, target, stage_target); });
  if (c.arity == 0) throw ConfigError("coloring arity must be positive");
  if (target == 0) throw ConfigError("extraction target must be positive");
  if (stage_target == 0) stage_target = std::max<std::size_t>(12, target / 3);

  auto run = std::make_shared<RamseyRun>(
      RamseyRun{c, meter, target, stage_target, std::move(base),
                std::max<std::size_t>(64, 4 * target)});
  run->ensure(1);
  NatStream h("mono(" + c.label + "=" + std::to_string(run->color) + ")",
              [run](std::span<const Nat> prefix, FuelMeter&) -> std::optional<Nat> {
                run->ensure(prefix.size() + 1);
                return run->h[prefix.size()];
              });
  return RamseyExtract{std::move(h), run->color, 0};
}

FamilyExtract almost_homogeneous_family(const std::vector<Coloring>& cs, NatStream base,
                                        const FuelMeterPtr& meter, std::size_t target) {
  if (!detail::on_big_stack())
    return detail::with_big_stack(
        [&] { return almost_homogeneous_family(cs, base, meter, target); });
  if (cs.empty()) throw ConfigError("almost_homogeneous_family: empty family");
  const unsigned r = cs.front().arity;
  for (const Coloring& c : cs)
    if (c.arity != r)
      throw ConfigError("almost_homogeneous_family: colorings must share arity");

  std::vector<NatStream> chain;
  std::vector<FamilyAssignment> assignments;
  NatStream current = std::move(base);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    RamseyExtract rec = infinite_ramsey_extract(cs[i], current, meter, target);
    assignments.push_back(FamilyAssignment{rec.color, i});
    chain.push_back(rec.stream);
    current = rec.stream;
  }
  return FamilyExtract{pseudo_intersection(std::move(chain)), std::move(assignments)};
}

}  // namespace ramsey
