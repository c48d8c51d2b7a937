#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ramsey/dyadic.hpp"
#include "ramsey/stream.hpp"

namespace ramsey {

class Space;
class Point;

// Built-in compact metric spaces. All metrics are dyadic-valued so that
// every certificate check is exact:
//   unit-cube:d   points are d-tuples of dyadics in [0,1], metric max|x-y|
//   omega1        points are N ∪ {inf}, d(m,n)=|2^-m - 2^-n|, d(m,inf)=2^-m
//   cantor        0/1 sequences (eventually constant), metric 2^-(first diff)
//   discrete:k    k points, metric 1 on distinct points
//   product(...)  finite product, metric sup_i min(2^-i, d_i(x_i,y_i))
//   omega-product(S)  countably many copies of S, same clamped sup metric
class Space {
 public:
  enum class Kind { UnitCube, OmegaPlusOne, Cantor, FiniteDiscrete, Product, OmegaPower };

  static Space unit_cube(unsigned dim);
  static Space omega_plus_one();
  static Space cantor();
  static Space finite_discrete(Nat k);
  static Space product(std::vector<Space> factors);
  static Space omega_power(Space factor);

  Kind kind() const { return n_->kind; }
  unsigned cube_dim() const { return n_->dim; }
  Nat discrete_size() const { return n_->k; }
  const std::vector<Space>& factors() const { return n_->factors; }
  const Space& power_factor() const { return n_->factors.front(); }
  // Factor of coordinate i (Product / OmegaPower only).
  const Space& coordinate_space(std::size_t i) const;
  bool is_product_like() const {
    return kind() == Kind::Product || kind() == Kind::OmegaPower;
  }

  std::string descriptor() const;
  static Space parse_descriptor(std::string_view text);

  Point basepoint() const;
  bool contains(const Point& p) const;

  friend bool operator==(const Space& a, const Space& b);

 private:
  struct Node {
    Kind kind;
    unsigned dim = 0;
    Nat k = 0;
    std::vector<Space> factors;
  };
  std::shared_ptr<const Node> n_;
  explicit Space(Node n) : n_(std::make_shared<const Node>(std::move(n))) {}
};

struct CantorPoint {
  std::vector<std::uint8_t> prefix;  // explicit leading bits
  std::uint8_t tail = 0;             // every bit past the prefix
  std::uint8_t bit(std::size_t i) const {
    return i < prefix.size() ? prefix[i] : tail;
  }
  friend bool operator==(const CantorPoint&, const CantorPoint&) = default;
};

class Point {
 public:
  using CubeCoords = std::vector<Dyadic>;
  using OmegaValue = std::optional<Nat>;  // nullopt = inf
  using TupleCoords = std::vector<Point>;

  static Point cube(CubeCoords coords);
  static Point omega(Nat m);
  static Point omega_infinity();
  static Point discrete(Nat v);
  static Point cantor(std::vector<std::uint8_t> prefix, std::uint8_t tail);
  // Product coordinates; for omega-power points trailing coordinates equal
  // to the factor basepoint are implied and stripped by normalize().
  static Point tuple(TupleCoords coords);

  bool is_cube() const { return std::holds_alternative<CubeCoords>(v_); }
  bool is_omega() const { return std::holds_alternative<OmegaValue>(v_); }
  bool is_discrete() const { return std::holds_alternative<Nat>(v_); }
  bool is_cantor() const { return std::holds_alternative<CantorPoint>(v_); }
  bool is_tuple() const { return std::holds_alternative<TupleCoords>(v_); }

  const CubeCoords& cube_coords() const { return std::get<CubeCoords>(v_); }
  const OmegaValue& omega_value() const { return std::get<OmegaValue>(v_); }
  Nat discrete_value() const { return std::get<Nat>(v_); }
  const CantorPoint& cantor_point() const { return std::get<CantorPoint>(v_); }
  const TupleCoords& tuple_coords() const { return std::get<TupleCoords>(v_); }

  // Coordinate i of a product-like point (basepoint when implied).
  Point coordinate(const Space& sp, std::size_t i) const;

  // Strips implied trailing coordinates / bits so equal points compare equal.
  Point normalized(const Space& sp) const;

  friend bool operator==(const Point& a, const Point& b) { return a.v_ == b.v_; }

  std::string str() const;

 private:
  std::variant<CubeCoords, OmegaValue, Nat, CantorPoint, TupleCoords> v_;
};

Dyadic distance(const Space& sp, const Point& p, const Point& q);

// A level-n cover of a space by balls of radius 2^-n. Centers are indexed
// and computed on demand (product covers can be huge); locate() returns the
// index of the first center whose ball contains the point, matching the
// enumeration order exactly.
class CoverLevel {
 public:
  CoverLevel(Space sp, std::uint32_t level);

  std::uint64_t count() const { return count_; }
  std::uint32_t level() const { return n_; }
  const Space& space() const { return sp_; }

  Point center(std::uint64_t index) const;
  std::uint64_t locate(const Point& p) const;
  std::vector<Point> all_centers(std::uint64_t cap = 65536) const;

 private:
  Space sp_;
  std::uint32_t n_;
  std::uint64_t count_;
  std::vector<CoverLevel> coordinate_covers_;  // product-like only
};

inline CoverLevel cover(const Space& sp, std::uint32_t n) { return CoverLevel(sp, n); }

// A located limit point: one cover-ball center per level, consecutive
// centers within 2^-n + 2^-(n+1) of each other.
using LocatedLimit = std::vector<Point>;

}  // namespace ramsey
