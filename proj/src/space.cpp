#include "ramsey/space.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ramsey {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > (std::uint64_t(1) << 62) / a)
    throw Error("cover too large to index");
  return a * b;
}

std::uint64_t pow2_count(std::uint32_t n) {
  if (n >= 62) throw Error("cover too large to index");
  return std::uint64_t(1) << n;
}

}  // namespace

// ---------------------------------------------------------------------------
// Space

Space Space::unit_cube(unsigned dim) {
  if (dim == 0) throw ConfigError("unit-cube dimension must be positive");
  Node n{Kind::UnitCube};
  n.dim = dim;
  return Space(std::move(n));
}

Space Space::omega_plus_one() { return Space(Node{Kind::OmegaPlusOne}); }

Space Space::cantor() { return Space(Node{Kind::Cantor}); }

Space Space::finite_discrete(Nat k) {
  if (k == 0) throw ConfigError("discrete space needs at least one point");
  Node n{Kind::FiniteDiscrete};
  n.k = k;
  return Space(std::move(n));
}

Space Space::product(std::vector<Space> factors) {
  if (factors.empty()) throw ConfigError("product needs at least one factor");
  Node n{Kind::Product};
  n.factors = std::move(factors);
  return Space(std::move(n));
}

Space Space::omega_power(Space factor) {
  Node n{Kind::OmegaPower};
  n.factors.push_back(std::move(factor));
  return Space(std::move(n));
}

const Space& Space::coordinate_space(std::size_t i) const {
  switch (kind()) {
    case Kind::Product:
      if (i >= n_->factors.size()) throw SpaceMismatch("coordinate out of range");
      return n_->factors[i];
    case Kind::OmegaPower:
      return n_->factors.front();
    default:
      throw SpaceMismatch("not a product space");
  }
}

bool operator==(const Space& a, const Space& b) {
  if (a.n_->kind != b.n_->kind) return false;
  switch (a.n_->kind) {
    case Space::Kind::UnitCube: return a.n_->dim == b.n_->dim;
    case Space::Kind::OmegaPlusOne:
    case Space::Kind::Cantor: return true;
    case Space::Kind::FiniteDiscrete: return a.n_->k == b.n_->k;
    case Space::Kind::Product:
    case Space::Kind::OmegaPower:
      return a.n_->factors == b.n_->factors;
  }
  return false;
}

std::string Space::descriptor() const {
  switch (kind()) {
    case Kind::UnitCube: return "unit-cube:" + std::to_string(cube_dim());
    case Kind::OmegaPlusOne: return "omega1";
    case Kind::Cantor: return "cantor";
    case Kind::FiniteDiscrete: return "discrete:" + std::to_string(discrete_size());
    case Kind::Product: {
      std::string s = "product(";
      for (std::size_t i = 0; i < factors().size(); ++i) {
        if (i) s += ",";
        s += factors()[i].descriptor();
      }
      return s + ")";
    }
    case Kind::OmegaPower:
      return "omega-product(" + power_factor().descriptor() + ")";
  }
  throw Error("unreachable");
}

namespace {

struct DescParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) { ++pos; return true; }
    return false;
  }
  std::string word() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '-'))
      ++pos;
    return std::string(text.substr(start, pos - start));
  }
  Nat number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ConfigError("space descriptor: number expected");
    return std::stoull(std::string(text.substr(start, pos - start)));
  }

  Space parse() {
    std::string w = word();
    if (w == "unit-cube") {
      if (!eat(':')) throw ConfigError("space descriptor: expected ':' after unit-cube");
      return Space::unit_cube(static_cast<unsigned>(number()));
    }
    if (w == "omega1") return Space::omega_plus_one();
    if (w == "cantor") return Space::cantor();
    if (w == "discrete") {
      if (!eat(':')) throw ConfigError("space descriptor: expected ':' after discrete");
      return Space::finite_discrete(number());
    }
    if (w == "product") {
      if (!eat('(')) throw ConfigError("space descriptor: expected '(' after product");
      std::vector<Space> fs;
      fs.push_back(parse());
      while (eat(',')) fs.push_back(parse());
      if (!eat(')')) throw ConfigError("space descriptor: expected ')'");
      return Space::product(std::move(fs));
    }
    if (w == "omega-product") {
      if (!eat('(')) throw ConfigError("space descriptor: expected '(' after omega-product");
      Space f = parse();
      if (!eat(')')) throw ConfigError("space descriptor: expected ')'");
      return Space::omega_power(std::move(f));
    }
    throw ConfigError("unknown space descriptor '" + w + "'");
  }
};

}  // namespace

Space Space::parse_descriptor(std::string_view text) {
  DescParser p{text};
  Space sp = p.parse();
  p.skip_ws();
  if (p.pos != text.size())
    throw ConfigError("space descriptor: trailing characters");
  return sp;
}

Point Space::basepoint() const {
  switch (kind()) {
    case Kind::UnitCube:
      return Point::cube(std::vector<Dyadic>(cube_dim()));
    case Kind::OmegaPlusOne:
      return Point::omega_infinity();
    case Kind::Cantor:
      return Point::cantor({}, 0);
    case Kind::FiniteDiscrete:
      return Point::discrete(0);
    case Kind::Product: {
      Point::TupleCoords cs;
      for (const Space& f : factors()) cs.push_back(f.basepoint());
      return Point::tuple(std::move(cs));
    }
    case Kind::OmegaPower:
      return Point::tuple({});
  }
  throw Error("unreachable");
}

bool Space::contains(const Point& p) const {
  switch (kind()) {
    case Kind::UnitCube: {
      if (!p.is_cube()) return false;
      const auto& cs = p.cube_coords();
      if (cs.size() != cube_dim()) return false;
      for (const Dyadic& c : cs)
        if (c < Dyadic() || c > Dyadic::one()) return false;
      return true;
    }
    case Kind::OmegaPlusOne:
      return p.is_omega();
    case Kind::Cantor: {
      if (!p.is_cantor()) return false;
      const auto& cp = p.cantor_point();
      if (cp.tail > 1) return false;
      return std::all_of(cp.prefix.begin(), cp.prefix.end(),
                         [](std::uint8_t b) { return b <= 1; });
    }
    case Kind::FiniteDiscrete:
      return p.is_discrete() && p.discrete_value() < discrete_size();
    case Kind::Product: {
      if (!p.is_tuple()) return false;
      const auto& cs = p.tuple_coords();
      if (cs.size() != factors().size()) return false;
      for (std::size_t i = 0; i < cs.size(); ++i)
        if (!factors()[i].contains(cs[i])) return false;
      return true;
    }
    case Kind::OmegaPower: {
      if (!p.is_tuple()) return false;
      for (const Point& c : p.tuple_coords())
        if (!power_factor().contains(c)) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Point

Point Point::cube(CubeCoords coords) {
  Point p;
  p.v_ = std::move(coords);
  return p;
}

Point Point::omega(Nat m) {
  Point p;
  p.v_ = OmegaValue(m);
  return p;
}

Point Point::omega_infinity() {
  Point p;
  p.v_ = OmegaValue(std::nullopt);
  return p;
}

Point Point::discrete(Nat v) {
  Point p;
  p.v_ = v;
  return p;
}

Point Point::cantor(std::vector<std::uint8_t> prefix, std::uint8_t tail) {
  while (!prefix.empty() && prefix.back() == tail) prefix.pop_back();
  Point p;
  p.v_ = CantorPoint{std::move(prefix), tail};
  return p;
}

Point Point::tuple(TupleCoords coords) {
  Point p;
  p.v_ = std::move(coords);
  return p;
}

Point Point::coordinate(const Space& sp, std::size_t i) const {
  if (!is_tuple()) throw SpaceMismatch("point is not a tuple");
  const auto& cs = tuple_coords();
  if (i < cs.size()) return cs[i];
  return sp.coordinate_space(i).basepoint();
}

Point Point::normalized(const Space& sp) const {
  switch (sp.kind()) {
    case Space::Kind::Product: {
      TupleCoords cs = tuple_coords();
      for (std::size_t i = 0; i < cs.size(); ++i)
        cs[i] = cs[i].normalized(sp.factors()[i]);
      return Point::tuple(std::move(cs));
    }
    case Space::Kind::OmegaPower: {
      TupleCoords cs = tuple_coords();
      const Space& f = sp.power_factor();
      for (Point& c : cs) c = c.normalized(f);
      const Point base = f.basepoint();
      while (!cs.empty() && cs.back() == base) cs.pop_back();
      return Point::tuple(std::move(cs));
    }
    default:
      return *this;
  }
}

std::string Point::str() const {
  if (is_cube()) {
    std::string s = "(";
    for (std::size_t i = 0; i < cube_coords().size(); ++i) {
      if (i) s += ",";
      s += cube_coords()[i].str();
    }
    return s + ")";
  }
  if (is_omega()) return omega_value() ? std::to_string(*omega_value()) : "inf";
  if (is_discrete()) return "#" + std::to_string(discrete_value());
  if (is_cantor()) {
    std::string s = "[";
    for (std::uint8_t b : cantor_point().prefix) s += char('0' + b);
    s += "|";
    s += char('0' + cantor_point().tail);
    return s + "...]";
  }
  std::string s = "<";
  for (std::size_t i = 0; i < tuple_coords().size(); ++i) {
    if (i) s += ",";
    s += tuple_coords()[i].str();
  }
  return s + ">";
}

// ---------------------------------------------------------------------------
// Metric

Dyadic distance(const Space& sp, const Point& p, const Point& q) {
  if (!sp.contains(p) || !sp.contains(q))
    throw SpaceMismatch("distance: point not in space " + sp.descriptor());
  switch (sp.kind()) {
    case Space::Kind::UnitCube: {
      Dyadic best;
      const auto& xs = p.cube_coords();
      const auto& ys = q.cube_coords();
      for (std::size_t i = 0; i < xs.size(); ++i)
        best = Dyadic::max(best, (xs[i] - ys[i]).abs());
      return best;
    }
    case Space::Kind::OmegaPlusOne: {
      const auto& a = p.omega_value();
      const auto& b = q.omega_value();
      if (!a && !b) return Dyadic();
      if (!a) return Dyadic::pow2neg(*b);
      if (!b) return Dyadic::pow2neg(*a);
      return (Dyadic::pow2neg(*a) - Dyadic::pow2neg(*b)).abs();
    }
    case Space::Kind::Cantor: {
      const auto& a = p.cantor_point();
      const auto& b = q.cantor_point();
      const std::size_t scan = std::max(a.prefix.size(), b.prefix.size());
      for (std::size_t i = 0; i <= scan; ++i)
        if (a.bit(i) != b.bit(i)) return Dyadic::pow2neg(i);
      return Dyadic();
    }
    case Space::Kind::FiniteDiscrete:
      return p.discrete_value() == q.discrete_value() ? Dyadic() : Dyadic::one();
    case Space::Kind::Product:
    case Space::Kind::OmegaPower: {
      std::size_t len;
      if (sp.kind() == Space::Kind::Product) {
        len = sp.factors().size();
      } else {
        len = std::max(p.tuple_coords().size(), q.tuple_coords().size());
      }
      Dyadic best;
      for (std::size_t i = 0; i < len; ++i) {
        const Dyadic clamp = Dyadic::pow2neg(i);
        if (clamp <= best) break;  // later coordinates cannot raise the sup
        const Dyadic di =
            distance(sp.coordinate_space(i), p.coordinate(sp, i), q.coordinate(sp, i));
        best = Dyadic::max(best, Dyadic::min(clamp, di));
      }
      return best;
    }
  }
  throw Error("unreachable");
}

// ---------------------------------------------------------------------------
// Covers

CoverLevel::CoverLevel(Space sp, std::uint32_t level) : sp_(std::move(sp)), n_(level) {
  switch (sp_.kind()) {
    case Space::Kind::UnitCube: {
      std::uint64_t per_axis = pow2_count(n_) + 1;
      count_ = 1;
      for (unsigned i = 0; i < sp_.cube_dim(); ++i) count_ = checked_mul(count_, per_axis);
      break;
    }
    case Space::Kind::OmegaPlusOne:
      count_ = std::uint64_t(n_) + 1;
      break;
    case Space::Kind::Cantor:
      count_ = pow2_count(n_);
      break;
    case Space::Kind::FiniteDiscrete:
      count_ = n_ == 0 ? 1 : sp_.discrete_size();
      break;
    case Space::Kind::Product:
    case Space::Kind::OmegaPower: {
      // Coordinate i contributes at most 2^-i to the metric, so only the
      // first n coordinates need covering at level n.
      std::size_t m = n_;
      if (sp_.kind() == Space::Kind::Product)
        m = std::min<std::size_t>(m, sp_.factors().size());
      count_ = 1;
      for (std::size_t i = 0; i < m; ++i) {
        coordinate_covers_.emplace_back(sp_.coordinate_space(i), n_);
        count_ = checked_mul(count_, coordinate_covers_.back().count());
      }
      break;
    }
  }
}

namespace {

// First grid index j with |x - j*2^-n| <= 2^-n, i.e. max(0, ceil(x*2^n) - 1).
std::uint64_t cube_axis_locate(const Dyadic& x, std::uint32_t n) {
  mpq_class scaled = x.rational();
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), n);
  mpz_class up;
  mpz_cdiv_q(up.get_mpz_t(), mpq_numref(scaled.get_mpq_t()), mpq_denref(scaled.get_mpq_t()));
  if (up <= 0) return 0;
  return mpz_class(up - 1).get_ui();
}

}  // namespace

Point CoverLevel::center(std::uint64_t index) const {
  if (index >= count_) throw Error("cover center index out of range");
  switch (sp_.kind()) {
    case Space::Kind::UnitCube: {
      const std::uint64_t per_axis = pow2_count(n_) + 1;
      const unsigned d = sp_.cube_dim();
      std::vector<Dyadic> coords(d);
      for (unsigned i = d; i-- > 0;) {
        coords[i] = Dyadic::scaled(mpz_class(static_cast<unsigned long>(index % per_axis)), n_);
        index /= per_axis;
      }
      return Point::cube(std::move(coords));
    }
    case Space::Kind::OmegaPlusOne:
      return index < n_ ? Point::omega(index) : Point::omega_infinity();
    case Space::Kind::Cantor: {
      std::vector<std::uint8_t> bits(n_);
      for (std::uint32_t i = 0; i < n_; ++i)
        bits[i] = static_cast<std::uint8_t>((index >> (n_ - 1 - i)) & 1);
      return Point::cantor(std::move(bits), 0);
    }
    case Space::Kind::FiniteDiscrete:
      return Point::discrete(n_ == 0 ? 0 : index);
    case Space::Kind::Product:
    case Space::Kind::OmegaPower: {
      const std::size_t m = coordinate_covers_.size();
      std::vector<std::uint64_t> digits(m);
      for (std::size_t i = m; i-- > 0;) {
        const std::uint64_t radix = coordinate_covers_[i].count();
        digits[i] = index % radix;
        index /= radix;
      }
      Point::TupleCoords cs;
      for (std::size_t i = 0; i < m; ++i)
        cs.push_back(coordinate_covers_[i].center(digits[i]));
      if (sp_.kind() == Space::Kind::Product)
        for (std::size_t i = m; i < sp_.factors().size(); ++i)
          cs.push_back(sp_.factors()[i].basepoint());
      return Point::tuple(std::move(cs)).normalized(sp_);
    }
  }
  throw Error("unreachable");
}

std::uint64_t CoverLevel::locate(const Point& p) const {
  if (!sp_.contains(p)) throw SpaceMismatch("locate: point not in space");
  switch (sp_.kind()) {
    case Space::Kind::UnitCube: {
      const std::uint64_t per_axis = pow2_count(n_) + 1;
      std::uint64_t idx = 0;
      for (const Dyadic& x : p.cube_coords())
        idx = idx * per_axis + cube_axis_locate(x, n_);
      return idx;
    }
    case Space::Kind::OmegaPlusOne: {
      const Dyadic radius = Dyadic::pow2neg(n_);
      for (std::uint64_t j = 0; j < count_; ++j)
        if (distance(sp_, center(j), p) <= radius) return j;
      throw NotCovered("omega1 cover misses a point");
    }
    case Space::Kind::Cantor: {
      const auto& cp = p.cantor_point();
      std::uint64_t idx = 0;
      for (std::uint32_t i = 0; i < n_; ++i)
        idx = (idx << 1) | cp.bit(i);
      return idx;
    }
    case Space::Kind::FiniteDiscrete:
      return n_ == 0 ? 0 : p.discrete_value();
    case Space::Kind::Product:
    case Space::Kind::OmegaPower: {
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < coordinate_covers_.size(); ++i) {
        idx = checked_mul(idx, coordinate_covers_[i].count());
        idx += coordinate_covers_[i].locate(p.coordinate(sp_, i));
      }
      return idx;
    }
  }
  throw Error("unreachable");
}

std::vector<Point> CoverLevel::all_centers(std::uint64_t cap) const {
  if (count_ > cap) throw Error("cover too large to enumerate");
  std::vector<Point> cs;
  cs.reserve(count_);
  for (std::uint64_t i = 0; i < count_; ++i) cs.push_back(center(i));
  return cs;
}

}  // namespace ramsey
