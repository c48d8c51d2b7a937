#include "ramsey/fin_ideal.hpp"

#include <algorithm>
#include <map>
#include "ramsey/big_stack.hpp"

namespace ramsey {

void TupleSet::check_dims() const {
  for (const auto& t : elems)
    if (t.size() != dim)
      throw DimensionMismatch("tuple set contains a tuple of the wrong length");
}

bool SplittingTree::validate(const TupleSet* leaves_within) const {
  if (branching == 0 || depth == 0) return false;
  if (!nodes.count(std::vector<Nat>{})) return false;
  for (const auto& node : nodes) {
    if (node.size() > depth) return false;
    if (!node.empty()) {
      std::vector<Nat> parent(node.begin(), node.end() - 1);
      if (!nodes.count(parent)) return false;
    }
    if (node.size() < depth) {
      std::size_t children = 0;
      for (auto it = nodes.upper_bound(node); it != nodes.end(); ++it) {
        if (it->size() < node.size() ||
            !std::equal(node.begin(), node.end(), it->begin()))
          break;
        if (it->size() == node.size() + 1) ++children;
      }
      if (children < branching) return false;
    } else if (leaves_within && !leaves_within->elems.count(node)) {
      return false;
    }
  }
  return true;
}

namespace {

// Recursive witness search: the b least first coordinates whose sections
// admit a witness, each extended by its section's least witness.
std::optional<std::set<std::vector<Nat>>> splitting_leaves(
    const std::set<std::vector<Nat>>& elems, unsigned dim, unsigned b) {
  if (dim == 1) {
    if (elems.size() < b) return std::nullopt;
    std::set<std::vector<Nat>> leaves;
    auto it = elems.begin();
    for (unsigned i = 0; i < b; ++i, ++it) leaves.insert(*it);
    return leaves;
  }
  std::map<Nat, std::set<std::vector<Nat>>> sections;
  for (const auto& t : elems)
    sections[t.front()].insert(std::vector<Nat>(t.begin() + 1, t.end()));
  std::set<std::vector<Nat>> leaves;
  unsigned found = 0;
  for (const auto& [k, section] : sections) {
    if (found == b) break;
    auto sub = splitting_leaves(section, dim - 1, b);
    if (!sub) continue;
    for (const auto& t : *sub) {
      std::vector<Nat> full{k};
      full.insert(full.end(), t.begin(), t.end());
      leaves.insert(std::move(full));
    }
    ++found;
  }
  if (found < b) return std::nullopt;
  return leaves;
}

}  // namespace

std::optional<SplittingTree> has_splitting_tree(const TupleSet& X, unsigned b) {
  if (b == 0) throw ConfigError("branching parameter must be positive");
  X.check_dims();
  auto leaves = splitting_leaves(X.elems, X.dim, b);
  if (!leaves) return std::nullopt;
  SplittingTree tree;
  tree.branching = b;
  tree.depth = X.dim;
  for (const auto& leaf : *leaves)
    for (std::size_t len = 0; len <= leaf.size(); ++len)
      tree.nodes.insert(std::vector<Nat>(leaf.begin(), leaf.begin() + len));
  return tree;
}

namespace {

struct FinThinned {
  NatStream stream;
  std::string case_kind;
  std::optional<Nat> column;
  std::optional<std::pair<unsigned, Nat>> pinned;
};

FinThinned fin_small_thin(const NatTupleFunction& f, NatStream base,
                          const ExtractOptions& opt, unsigned b,
                          const FuelMeterPtr& meter);

// Lazy diagonal for arity > 1: k_i is the least element of the current
// stream, which is then thinned by the recursive extractor for every
// n-coordinate projection of the section at k_i.
struct FinDiagonal {
  NatTupleFunction f;
  ExtractOptions inner;
  FuelMeterPtr meter;
  unsigned b;
  NatStream current;
  std::vector<Nat> ks;

  void ensure(std::size_t i) {
    while (ks.size() <= i) {
      const Nat k = current.at(0, *meter);
      ks.push_back(k);
      NatStream next = NatStream::above(current, k);
      for (unsigned drop = 0; drop < f.out_dim; ++drop) {
        NatTupleFunction proj{
            f.arity - 1, f.out_dim - 1,
            [rule = f.rule, k, drop](std::span<const Nat> s, FuelMeter& m) {
              std::vector<Nat> t;
              t.reserve(s.size() + 1);
              t.push_back(k);
              t.insert(t.end(), s.begin(), s.end());
              std::vector<Nat> v = rule(t, m);
              v.erase(v.begin() + drop);
              return v;
            },
            f.label + "|min=" + std::to_string(k) + "|drop" + std::to_string(drop)};
        next = fin_small_thin(proj, next, inner, b, meter).stream;
      }
      current = next;
    }
  }
};

FinThinned fin_small_thin(const NatTupleFunction& f, NatStream base,
                          const ExtractOptions& opt, unsigned b,
                          const FuelMeterPtr& meter) {
  const std::size_t target = opt.pigeonhole_target();

  if (f.arity == 1) {
    // Pigeonhole on first coordinates; when no class recurs within the scan
    // horizon, keep one pair per first coordinate instead.
    std::map<Nat, std::size_t> counts;
    std::optional<Nat> column;
    const std::size_t horizon = std::max<std::size_t>(4 * target, 64);
    for (std::size_t i = 0; i < horizon; ++i) {
      const Nat v = base.at(i, *meter);
      const Nat key = f.rule(std::span<const Nat>(&v, 1), *meter).front();
      if (++counts[key] == target) {
        column = key;
        break;
      }
    }
    if (column) {
      NatStream thinned = NatStream::filter(
          base,
          [rule = f.rule, key = *column](Nat v, FuelMeter& m) {
            return rule(std::span<const Nat>(&v, 1), m).front() == key;
          },
          "column-" + std::to_string(*column));
      return FinThinned{std::move(thinned), "column", column, std::nullopt};
    }
    auto seen = std::make_shared<std::map<Nat, std::vector<Nat>>>();
    NatStream thinned = NatStream::filter(
        base,
        [rule = f.rule, seen](Nat v, FuelMeter& m) {
          std::vector<Nat> pair = rule(std::span<const Nat>(&v, 1), m);
          auto [it, fresh] = seen->emplace(pair.front(), pair);
          return fresh || it->second == pair;
        },
        "partial-function");
    return FinThinned{std::move(thinned), "partial-function", std::nullopt, std::nullopt};
  }

  ExtractOptions inner = opt;
  inner.prefix_len = std::max<std::size_t>(opt.prefix_len / 2,
                                           std::size_t(opt.max_level) + f.arity);
  auto diag = std::make_shared<FinDiagonal>(
      FinDiagonal{f, inner, meter, b, std::move(base), {}});
  NatStream kstream(
      "fin-diagonal(" + f.label + ")",
      [diag](std::span<const Nat> prefix, FuelMeter&) -> std::optional<Nat> {
        diag->ensure(prefix.size());
        return diag->ks[prefix.size()];
      });

  // Convergence of f in the (n+1)-fold power of omega+1 decides the case.
  std::vector<Space> factors(f.out_dim, Space::omega_plus_one());
  Space power = Space::product(std::move(factors));
  TupleFunction adapter(
      "omega-adapter(" + f.label + ")", f.arity, power,
      [rule = f.rule, meter](std::span<const Nat> s) {
        std::vector<Nat> v = rule(s, *meter);
        Point::TupleCoords cs;
        for (Nat x : v) cs.push_back(Point::omega(x));
        return Point::tuple(std::move(cs));
      });
  ExtractResult conv = extract_convergent(adapter, kstream, opt, meter);

  const Point& deepest = conv.cert.limit_centers.back();
  for (unsigned i = 0; i < f.out_dim; ++i) {
    const Point coord = deepest.coordinate(power, i);
    if (coord.omega_value().has_value()) {
      return FinThinned{conv.stream, "pinned-coordinate", std::nullopt,
                        std::make_pair(i, *coord.omega_value())};
    }
  }
  return FinThinned{conv.stream, "diagonal", std::nullopt, std::nullopt};
}

}  // namespace

FinSmallResult fin_small_extract(const NatTupleFunction& f, NatStream base,
                                 const ExtractOptions& opt, unsigned b) {
  if (!detail::on_big_stack())
    return detail::with_big_stack(
        [&] { return fin_small_extract(f, base, opt, b); });
  if (f.arity < 1) throw ConfigError("fin_small_extract needs arity >= 1");
  if (f.out_dim != f.arity + 1)
    throw DimensionMismatch("fin_small_extract expects values in omega^(arity+1)");
  if (b == 0) throw ConfigError("branching parameter must be positive");
  opt.validate(f.arity);
  FuelMeterPtr meter = make_meter(opt.fuel);

  FinThinned thinned = fin_small_thin(f, base, opt, b, meter);

  FinSmallResult result;
  result.case_kind = thinned.case_kind;
  result.column = thinned.column;
  result.pinned = thinned.pinned;
  result.branching = b;
  auto got = thinned.stream.materialize(opt.prefix_len, *meter);
  result.prefix.assign(got.begin(), got.end());
  result.image.dim = f.out_dim;
  for (CombinationIter it(result.prefix.size(), f.arity); it.valid(); it.next()) {
    std::vector<Nat> tuple;
    for (std::size_t pos : it.positions()) tuple.push_back(result.prefix[pos]);
    result.image.elems.insert(f.rule(tuple, *meter));
  }
  result.tree_free = !has_splitting_tree(result.image, b).has_value();
  return result;
}

NatTupleFunction g_function(unsigned r) {
  if (r < 1) throw ConfigError("g_function needs r >= 1");
  return NatTupleFunction{
      r + 1, r + 1,
      [](std::span<const Nat> s, FuelMeter&) {
        return std::vector<Nat>(s.begin(), s.end());
      },
      "G(" + std::to_string(r) + ")"};
}

TupleSet up_arrow(std::span<const Nat> B, unsigned n) {
  for (std::size_t i = 1; i < B.size(); ++i)
    if (B[i] <= B[i - 1]) throw ConfigError("up_arrow: B must be strictly increasing");
  if (n == 0) throw ConfigError("up_arrow: n must be positive");
  TupleSet out;
  out.dim = n;
  for (CombinationIter it(B.size(), n); it.valid(); it.next()) {
    std::vector<Nat> t;
    for (std::size_t pos : it.positions()) t.push_back(B[pos]);
    out.elems.insert(std::move(t));
  }
  return out;
}

bool check_avoidance(const TupleSet& a, std::span<const Nat> B, Nat cut) {
  a.check_dims();
  for (const auto& t : a.elems) {
    bool inside = true;
    for (std::size_t i = 0; i < t.size() && inside; ++i) {
      if (t[i] < cut || (i > 0 && t[i] <= t[i - 1])) inside = false;
      else if (!std::binary_search(B.begin(), B.end(), t[i])) inside = false;
    }
    if (inside) return false;
  }
  return true;
}

SplittingTree mad_diagnostic(std::span<const Nat> B, unsigned r) {
  if (r < 1) throw ConfigError("mad_diagnostic needs r >= 1");
  const std::size_t m = B.size();
  const unsigned depth = r + 1;
  if (m < 2 * std::size_t(depth))
    throw InsufficientLength("mad_diagnostic needs at least 2(r+1) elements");
  const std::size_t block = m / depth;

  // Level j draws its coordinates from block j of B, so every internal node
  // has exactly `block` children and every leaf is strictly increasing.
  SplittingTree tree;
  tree.branching = static_cast<unsigned>(block);
  tree.depth = depth;
  std::vector<std::vector<Nat>> frontier{{}};
  tree.nodes.insert(std::vector<Nat>{});
  for (unsigned level = 0; level < depth; ++level) {
    std::vector<std::vector<Nat>> next;
    for (const auto& node : frontier) {
      for (std::size_t i = 0; i < block; ++i) {
        std::vector<Nat> child = node;
        child.push_back(B[level * block + i]);
        tree.nodes.insert(child);
        next.push_back(std::move(child));
      }
    }
    frontier = std::move(next);
  }
  return tree;
}

}  // namespace ramsey
