#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "ramsey/fin_ideal.hpp"
#include "ramsey/ramsey.hpp"
#include "ramsey/rng.hpp"

namespace ramsey::dsl {

// Small exact expression language over the sorted input tuple x0 < x1 < ...:
// integers, + - * mod min max, pow2neg(e) = 2^-e, tuple construction, and
// if(a CMP b, t, e) with CMP one of < <= =. Values are integers, dyadics, or
// tuples; everything is checked at parse time against the target shape.
enum class Cmp { Lt, Le, Eq };

struct Type {
  enum class Kind { Int, Dyadic, Tuple };
  Kind kind = Kind::Int;
  std::vector<Type> elems;

  friend bool operator==(const Type&, const Type&);
  std::string str() const;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Op { Literal, Var, Add, Sub, Mul, Mod, Min, Max, Pow2Neg, MakeTuple, If };
  Op op = Op::Literal;
  mpz_class literal;
  unsigned var_index = 0;
  Cmp cmp = Cmp::Lt;          // If only; args = {lhs, rhs, then, else}
  std::vector<ExprPtr> args;
  std::size_t pos = 1;        // 1-based source position
  Type type;                  // synthesized at parse time
};

ExprPtr parse(std::string_view src, unsigned arity);
std::string print(const Expr& e);
bool equal(const Expr& a, const Expr& b);

// Shape check of an expression type against a space's point shape.
void check_point_shape(const Type& t, const Space& sp);

mpz_class eval_int(const Expr& e, std::span<const Nat> vars);
Point eval_point(const Expr& e, std::span<const Nat> vars, const Space& target);

TupleFunction make_tuple_function(const std::string& src, unsigned arity, Space target);
Coloring make_coloring(const std::string& src, unsigned arity, std::uint64_t palette);
NatTupleFunction make_nat_tuple_function(const std::string& src, unsigned arity,
                                         unsigned out_dim);

// Random expression sources for test corpora. Integer expressions use
// + * mod min max over variables and small literals, plus shallow
// conditionals guarded by sums (their transient classes stay far below any
// pigeonhole commit target). Unit expressions evaluate inside [0,1].
std::string random_int_expression(SplitMix64& rng, unsigned arity, unsigned depth);
std::string random_unit_expression(SplitMix64& rng, unsigned arity, unsigned depth);

}  // namespace ramsey::dsl

namespace ramsey {

// Point literals for fixture arguments and tests: INT, INT/INT (the
// denominator a power of two), 'inf', or a tuple of literals.
Point parse_point_literal(std::string_view src, const Space& sp);

}  // namespace ramsey
