#include "ramsey/dsl.hpp"

#include <algorithm>
#include <cctype>

namespace ramsey::dsl {

bool operator==(const Type& a, const Type& b) {
  return a.kind == b.kind && a.elems == b.elems;
}

std::string Type::str() const {
  switch (kind) {
    case Kind::Int: return "int";
    case Kind::Dyadic: return "dyadic";
    case Kind::Tuple: {
      std::string s = "(";
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) s += ",";
        s += elems[i].str();
      }
      return s + ")";
    }
  }
  return "?";
}

namespace {

const Type kInt{Type::Kind::Int, {}};
const Type kDyadic{Type::Kind::Dyadic, {}};

bool is_scalar(const Type& t) { return t.kind != Type::Kind::Tuple; }

Type join_scalar(const Type& a, const Type& b, std::size_t pos, const char* what) {
  if (!is_scalar(a) || !is_scalar(b))
    throw TypeError(std::string(what) + " needs scalar operands", pos);
  return (a.kind == Type::Kind::Dyadic || b.kind == Type::Kind::Dyadic) ? kDyadic : kInt;
}

struct Parser {
  std::string_view src;
  std::size_t pos = 0;  // 0-based cursor
  unsigned arity;

  std::size_t mark() const { return pos + 1; }  // 1-based for messages

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw SyntaxError(std::string("expected '") + c + "'", mark());
  }

  // Peeks a keyword at the cursor without consuming unless it matches.
  bool eat_word(std::string_view w) {
    skip_ws();
    if (src.substr(pos, w.size()) != w) return false;
    const std::size_t after = pos + w.size();
    if (after < src.size() &&
        (std::isalnum(static_cast<unsigned char>(src[after])) || src[after] == '_'))
      return false;
    pos = after;
    return true;
  }

  ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (;;) {
      skip_ws();
      const std::size_t at = mark();
      if (eat('+')) lhs = binary(Expr::Op::Add, lhs, parse_term(), at, "+");
      else if (eat('-')) lhs = binary(Expr::Op::Sub, lhs, parse_term(), at, "-");
      else return lhs;
    }
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_atom();
    for (;;) {
      skip_ws();
      const std::size_t at = mark();
      if (eat('*')) lhs = binary(Expr::Op::Mul, lhs, parse_atom(), at, "*");
      else if (eat_word("mod")) lhs = make_mod(lhs, parse_atom(), at);
      else return lhs;
    }
  }

  ExprPtr binary(Expr::Op op, ExprPtr a, ExprPtr b, std::size_t at, const char* what) {
    Expr e;
    e.op = op;
    e.pos = at;
    e.type = join_scalar(a->type, b->type, at, what);
    e.args = {std::move(a), std::move(b)};
    return make(std::move(e));
  }

  ExprPtr make_mod(ExprPtr a, ExprPtr b, std::size_t at) {
    if (!(a->type == kInt) || !(b->type == kInt))
      throw TypeError("mod needs integer operands", at);
    if (b->op == Expr::Op::Literal && b->literal == 0)
      throw TypeError("mod by zero", b->pos);
    Expr e;
    e.op = Expr::Op::Mod;
    e.pos = at;
    e.type = kInt;
    e.args = {std::move(a), std::move(b)};
    return make(std::move(e));
  }

  Cmp parse_cmp() {
    skip_ws();
    const std::size_t at = mark();
    if (eat('<')) return eat('=') ? Cmp::Le : Cmp::Lt;
    if (eat('=')) return Cmp::Eq;
    throw SyntaxError("expected a comparison (< <= =)", at);
  }

  ExprPtr parse_atom() {
    skip_ws();
    const std::size_t at = mark();
    if (pos >= src.size()) throw SyntaxError("expected an expression", at);
    const char c = src[pos];

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      Expr e;
      e.op = Expr::Op::Literal;
      e.literal = mpz_class(std::string(src.substr(start, pos - start)), 10);
      e.pos = at;
      e.type = kInt;
      return make(std::move(e));
    }

    if (c == '(') {
      ++pos;
      std::vector<ExprPtr> elems;
      elems.push_back(parse_expr());
      bool is_tuple = false;
      while (eat(',')) {
        is_tuple = true;
        elems.push_back(parse_expr());
      }
      expect(')');
      if (!is_tuple) return elems.front();  // plain grouping
      Expr e;
      e.op = Expr::Op::MakeTuple;
      e.pos = at;
      for (const ExprPtr& el : elems) e.type.elems.push_back(el->type);
      e.type.kind = Type::Kind::Tuple;
      e.args = std::move(elems);
      return make(std::move(e));
    }

    if (eat_word("pow2neg")) {
      expect('(');
      ExprPtr arg = parse_expr();
      expect(')');
      if (!(arg->type == kInt)) throw TypeError("pow2neg needs an integer", at);
      Expr e;
      e.op = Expr::Op::Pow2Neg;
      e.pos = at;
      e.type = kDyadic;
      e.args = {std::move(arg)};
      return make(std::move(e));
    }
    const bool is_min = eat_word("min");
    if (is_min || eat_word("max")) {
      expect('(');
      ExprPtr a = parse_expr();
      expect(',');
      ExprPtr b = parse_expr();
      expect(')');
      Expr e;
      e.op = is_min ? Expr::Op::Min : Expr::Op::Max;
      e.pos = at;
      e.type = join_scalar(a->type, b->type, at, is_min ? "min" : "max");
      e.args = {std::move(a), std::move(b)};
      return make(std::move(e));
    }
    if (eat_word("if")) {
      expect('(');
      ExprPtr lhs = parse_expr();
      Cmp cmp = parse_cmp();
      ExprPtr rhs = parse_expr();
      expect(',');
      ExprPtr then_e = parse_expr();
      expect(',');
      ExprPtr else_e = parse_expr();
      expect(')');
      if (!is_scalar(lhs->type) || !is_scalar(rhs->type))
        throw TypeError("comparison needs scalar operands", at);
      Type result;
      if (then_e->type == else_e->type) {
        result = then_e->type;
      } else if (is_scalar(then_e->type) && is_scalar(else_e->type)) {
        result = kDyadic;
      } else {
        throw TypeError("conditional branches have different types", at);
      }
      Expr e;
      e.op = Expr::Op::If;
      e.pos = at;
      e.cmp = cmp;
      e.type = std::move(result);
      e.args = {std::move(lhs), std::move(rhs), std::move(then_e), std::move(else_e)};
      return make(std::move(e));
    }

    if (c == 'x') {
      std::size_t start = pos;
      ++pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      if (pos == start + 1) throw SyntaxError("expected a variable index after 'x'", at);
      const unsigned idx =
          static_cast<unsigned>(std::stoul(std::string(src.substr(start + 1, pos - start - 1))));
      if (idx >= arity)
        throw TypeError("variable x" + std::to_string(idx) + " out of range for arity " +
                            std::to_string(arity),
                        at);
      Expr e;
      e.op = Expr::Op::Var;
      e.var_index = idx;
      e.pos = at;
      e.type = kInt;
      return make(std::move(e));
    }

    throw SyntaxError("expected an expression", at);
  }
};

}  // namespace

ExprPtr parse(std::string_view src, unsigned arity) {
  Parser p{src, 0, arity};
  p.skip_ws();
  if (p.pos == src.size()) throw SyntaxError("empty expression", 1);
  ExprPtr e = p.parse_expr();
  p.skip_ws();
  if (p.pos != src.size()) throw SyntaxError("trailing characters", p.mark());
  return e;
}

std::string print(const Expr& e) {
  switch (e.op) {
    case Expr::Op::Literal: return e.literal.get_str();
    case Expr::Op::Var: return "x" + std::to_string(e.var_index);
    case Expr::Op::Add: return "(" + print(*e.args[0]) + " + " + print(*e.args[1]) + ")";
    case Expr::Op::Sub: return "(" + print(*e.args[0]) + " - " + print(*e.args[1]) + ")";
    case Expr::Op::Mul: return "(" + print(*e.args[0]) + " * " + print(*e.args[1]) + ")";
    case Expr::Op::Mod: return "(" + print(*e.args[0]) + " mod " + print(*e.args[1]) + ")";
    case Expr::Op::Min: return "min(" + print(*e.args[0]) + ", " + print(*e.args[1]) + ")";
    case Expr::Op::Max: return "max(" + print(*e.args[0]) + ", " + print(*e.args[1]) + ")";
    case Expr::Op::Pow2Neg: return "pow2neg(" + print(*e.args[0]) + ")";
    case Expr::Op::MakeTuple: {
      std::string s = "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) s += ", ";
        s += print(*e.args[i]);
      }
      return s + ")";
    }
    case Expr::Op::If: {
      const char* op = e.cmp == Cmp::Lt ? " < " : e.cmp == Cmp::Le ? " <= " : " = ";
      return "if(" + print(*e.args[0]) + op + print(*e.args[1]) + ", " +
             print(*e.args[2]) + ", " + print(*e.args[3]) + ")";
    }
  }
  throw Error("unreachable");
}

bool equal(const Expr& a, const Expr& b) {
  if (a.op != b.op || a.cmp != b.cmp || a.var_index != b.var_index ||
      a.literal != b.literal || a.args.size() != b.args.size())
    return false;
  for (std::size_t i = 0; i < a.args.size(); ++i)
    if (!equal(*a.args[i], *b.args[i])) return false;
  return true;
}

void check_point_shape(const Type& t, const Space& sp) {
  switch (sp.kind()) {
    case Space::Kind::UnitCube: {
      const unsigned d = sp.cube_dim();
      if (d == 1 && is_scalar(t)) return;
      if (t.kind != Type::Kind::Tuple || t.elems.size() != d)
        throw TypeError("expected " + std::to_string(d) + " scalar coordinates for " +
                        sp.descriptor());
      for (const Type& el : t.elems)
        if (!is_scalar(el))
          throw TypeError("cube coordinates must be scalars");
      return;
    }
    case Space::Kind::OmegaPlusOne:
    case Space::Kind::FiniteDiscrete:
      if (!(t == kInt))
        throw TypeError("expected an integer value for " + sp.descriptor());
      return;
    case Space::Kind::Cantor:
      if (t == kInt) return;
      if (t.kind != Type::Kind::Tuple)
        throw TypeError("expected bits for " + sp.descriptor());
      for (const Type& el : t.elems)
        if (!(el == kInt)) throw TypeError("cantor bits must be integers");
      return;
    case Space::Kind::Product: {
      if (t.kind != Type::Kind::Tuple || t.elems.size() != sp.factors().size())
        throw TypeError("expected a " + std::to_string(sp.factors().size()) +
                        "-tuple for " + sp.descriptor());
      for (std::size_t i = 0; i < t.elems.size(); ++i)
        check_point_shape(t.elems[i], sp.factors()[i]);
      return;
    }
    case Space::Kind::OmegaPower: {
      if (t.kind != Type::Kind::Tuple)
        throw TypeError("expected a tuple for " + sp.descriptor());
      for (const Type& el : t.elems) check_point_shape(el, sp.power_factor());
      return;
    }
  }
}

namespace {

struct Value {
  enum class Kind { Int, Dyadic, Tuple };
  Kind kind = Kind::Int;
  mpz_class i;
  Dyadic d;
  std::vector<Value> elems;

  Dyadic as_dyadic() const {
    if (kind == Kind::Dyadic) return d;
    if (kind == Kind::Int) return Dyadic(i);
    throw EvalError("expected a scalar value");
  }
};

Value eval(const Expr& e, std::span<const Nat> vars) {
  auto scalar_op = [&](const Expr& node, auto int_op, auto dy_op) -> Value {
    Value a = eval(*node.args[0], vars);
    Value b = eval(*node.args[1], vars);
    if (a.kind == Value::Kind::Int && b.kind == Value::Kind::Int) {
      Value r;
      r.kind = Value::Kind::Int;
      r.i = int_op(a.i, b.i);
      return r;
    }
    Value r;
    r.kind = Value::Kind::Dyadic;
    r.d = dy_op(a.as_dyadic(), b.as_dyadic());
    return r;
  };

  switch (e.op) {
    case Expr::Op::Literal: {
      Value v;
      v.kind = Value::Kind::Int;
      v.i = e.literal;
      return v;
    }
    case Expr::Op::Var: {
      Value v;
      v.kind = Value::Kind::Int;
      v.i = mpz_class(static_cast<unsigned long>(vars[e.var_index]));
      return v;
    }
    case Expr::Op::Add:
      return scalar_op(e, [](const mpz_class& a, const mpz_class& b) { return mpz_class(a + b); },
                       [](const Dyadic& a, const Dyadic& b) { return a + b; });
    case Expr::Op::Sub:
      return scalar_op(e, [](const mpz_class& a, const mpz_class& b) { return mpz_class(a - b); },
                       [](const Dyadic& a, const Dyadic& b) { return a - b; });
    case Expr::Op::Mul:
      return scalar_op(e, [](const mpz_class& a, const mpz_class& b) { return mpz_class(a * b); },
                       [](const Dyadic& a, const Dyadic& b) { return a * b; });
    case Expr::Op::Min:
      return scalar_op(e,
                       [](const mpz_class& a, const mpz_class& b) { return std::min(a, b); },
                       [](const Dyadic& a, const Dyadic& b) { return Dyadic::min(a, b); });
    case Expr::Op::Max:
      return scalar_op(e,
                       [](const mpz_class& a, const mpz_class& b) { return std::max(a, b); },
                       [](const Dyadic& a, const Dyadic& b) { return Dyadic::max(a, b); });
    case Expr::Op::Mod: {
      Value a = eval(*e.args[0], vars);
      Value b = eval(*e.args[1], vars);
      if (b.i <= 0) throw EvalError("mod needs a positive divisor");
      Value r;
      r.kind = Value::Kind::Int;
      mpz_mod(r.i.get_mpz_t(), a.i.get_mpz_t(), b.i.get_mpz_t());
      return r;
    }
    case Expr::Op::Pow2Neg: {
      Value a = eval(*e.args[0], vars);
      if (a.i < 0) throw EvalError("pow2neg needs a nonnegative exponent");
      if (!a.i.fits_ulong_p()) throw EvalError("pow2neg exponent too large");
      Value r;
      r.kind = Value::Kind::Dyadic;
      r.d = Dyadic::pow2neg(a.i.get_ui());
      return r;
    }
    case Expr::Op::MakeTuple: {
      Value r;
      r.kind = Value::Kind::Tuple;
      for (const ExprPtr& el : e.args) r.elems.push_back(eval(*el, vars));
      return r;
    }
    case Expr::Op::If: {
      Value a = eval(*e.args[0], vars);
      Value b = eval(*e.args[1], vars);
      bool cond;
      if (a.kind == Value::Kind::Int && b.kind == Value::Kind::Int) {
        cond = e.cmp == Cmp::Lt ? a.i < b.i : e.cmp == Cmp::Le ? a.i <= b.i : a.i == b.i;
      } else {
        const Dyadic x = a.as_dyadic(), y = b.as_dyadic();
        cond = e.cmp == Cmp::Lt ? x < y : e.cmp == Cmp::Le ? x <= y : x == y;
      }
      return eval(*e.args[cond ? 2 : 3], vars);
    }
  }
  throw Error("unreachable");
}

Nat value_to_nat(const mpz_class& v) {
  if (v < 0) throw EvalError("expected a nonnegative value, got " + v.get_str());
  if (!v.fits_ulong_p()) throw EvalError("value too large: " + v.get_str());
  return v.get_ui();
}

Point value_to_point(const Value& v, const Space& sp) {
  switch (sp.kind()) {
    case Space::Kind::UnitCube: {
      std::vector<Dyadic> coords;
      if (v.kind == Value::Kind::Tuple) {
        for (const Value& el : v.elems) coords.push_back(el.as_dyadic());
      } else {
        coords.push_back(v.as_dyadic());
      }
      return Point::cube(std::move(coords));
    }
    case Space::Kind::OmegaPlusOne:
      return Point::omega(value_to_nat(v.i));
    case Space::Kind::FiniteDiscrete:
      return Point::discrete(value_to_nat(v.i));
    case Space::Kind::Cantor: {
      std::vector<std::uint8_t> bits;
      if (v.kind == Value::Kind::Tuple) {
        for (const Value& el : v.elems) {
          const Nat b = value_to_nat(el.i);
          if (b > 1) throw EvalError("cantor bits must be 0 or 1");
          bits.push_back(static_cast<std::uint8_t>(b));
        }
      } else {
        const Nat b = value_to_nat(v.i);
        if (b > 1) throw EvalError("cantor bits must be 0 or 1");
        bits.push_back(static_cast<std::uint8_t>(b));
      }
      const std::uint8_t tail = bits.empty() ? 0 : bits.back();
      return Point::cantor(std::move(bits), tail);
    }
    case Space::Kind::Product: {
      Point::TupleCoords cs;
      for (std::size_t i = 0; i < sp.factors().size(); ++i)
        cs.push_back(value_to_point(v.elems[i], sp.factors()[i]));
      return Point::tuple(std::move(cs));
    }
    case Space::Kind::OmegaPower: {
      Point::TupleCoords cs;
      for (const Value& el : v.elems)
        cs.push_back(value_to_point(el, sp.power_factor()));
      return Point::tuple(std::move(cs)).normalized(sp);
    }
  }
  throw Error("unreachable");
}

}  // namespace

mpz_class eval_int(const Expr& e, std::span<const Nat> vars) {
  Value v = eval(e, vars);
  if (v.kind != Value::Kind::Int) throw EvalError("expected an integer value");
  return v.i;
}

Point eval_point(const Expr& e, std::span<const Nat> vars, const Space& target) {
  return value_to_point(eval(e, vars), target);
}

TupleFunction make_tuple_function(const std::string& src, unsigned arity, Space target) {
  ExprPtr e = parse(src, arity);
  check_point_shape(e->type, target);
  return TupleFunction(src, arity, target, [e, target](std::span<const Nat> vars) {
    return eval_point(*e, vars, target);
  });
}

Coloring make_coloring(const std::string& src, unsigned arity, std::uint64_t palette) {
  if (palette == 0) throw ConfigError("palette must be positive");
  ExprPtr e = parse(src, arity);
  if (!(e->type == Type{Type::Kind::Int, {}}))
    throw TypeError("a coloring must be an integer expression", e->pos);
  return Coloring{
      arity, palette,
      [e, palette](std::span<const Nat> vars, FuelMeter& meter) -> Color {
        meter.charge_oracle();
        mpz_class v = eval_int(*e, vars);
        mpz_class m;
        mpz_mod_ui(m.get_mpz_t(), v.get_mpz_t(), palette);
        return m.get_ui();
      },
      src};
}

NatTupleFunction make_nat_tuple_function(const std::string& src, unsigned arity,
                                         unsigned out_dim) {
  ExprPtr e = parse(src, arity);
  Type expect;
  expect.kind = Type::Kind::Tuple;
  expect.elems.assign(out_dim, Type{Type::Kind::Int, {}});
  if (!(e->type == expect))
    throw TypeError("expected a tuple of " + std::to_string(out_dim) + " integers",
                    e->pos);
  return NatTupleFunction{
      arity, out_dim,
      [e](std::span<const Nat> vars, FuelMeter& meter) {
        meter.charge_oracle();
        std::vector<Nat> out;
        for (const ExprPtr& el : e->args) out.push_back(value_to_nat(eval_int(*el, vars)));
        return out;
      },
      src};
}

namespace {

std::string rand_var(SplitMix64& rng, unsigned arity) {
  return "x" + std::to_string(rng.below(arity));
}

}  // namespace

std::string random_int_expression(SplitMix64& rng, unsigned arity, unsigned depth) {
  if (depth == 0 || rng.below(4) == 0) {
    if (rng.below(2) == 0) return rand_var(rng, arity);
    return std::to_string(rng.below(8));
  }
  switch (rng.below(6)) {
    case 0:
      return "(" + random_int_expression(rng, arity, depth - 1) + " + " +
             random_int_expression(rng, arity, depth - 1) + ")";
    case 1:
      return "(" + random_int_expression(rng, arity, depth - 1) + " * " +
             random_int_expression(rng, arity, depth - 1) + ")";
    case 2:
      return "(" + random_int_expression(rng, arity, depth - 1) + " mod " +
             std::to_string(2 + rng.below(6)) + ")";
    case 3:
      return "min(" + random_int_expression(rng, arity, depth - 1) + ", " +
             random_int_expression(rng, arity, depth - 1) + ")";
    case 4:
      return "max(" + random_int_expression(rng, arity, depth - 1) + ", " +
             random_int_expression(rng, arity, depth - 1) + ")";
    default:
      // Shallow guard: sums of variables and small literals only.
      return "if(" + rand_var(rng, arity) + " + " + std::to_string(rng.below(8)) +
             (rng.below(2) ? std::string(" < ") : std::string(" <= ")) + rand_var(rng, arity) +
             " + " + std::to_string(rng.below(8)) + ", " +
             random_int_expression(rng, arity, depth - 1) + ", " +
             random_int_expression(rng, arity, depth - 1) + ")";
  }
}

std::string random_unit_expression(SplitMix64& rng, unsigned arity, unsigned depth) {
  if (depth == 0 || rng.below(3) == 0)
    return "pow2neg(" + random_int_expression(rng, arity, depth == 0 ? 0 : depth - 1) + ")";
  switch (rng.below(4)) {
    case 0:
      return "min(" + random_unit_expression(rng, arity, depth - 1) + ", " +
             random_unit_expression(rng, arity, depth - 1) + ")";
    case 1:
      return "max(" + random_unit_expression(rng, arity, depth - 1) + ", " +
             random_unit_expression(rng, arity, depth - 1) + ")";
    case 2:
      return "(" + random_unit_expression(rng, arity, depth - 1) + " * " +
             random_unit_expression(rng, arity, depth - 1) + ")";
    default:
      return "((" + random_unit_expression(rng, arity, depth - 1) + " + " +
             random_unit_expression(rng, arity, depth - 1) + ") * pow2neg(1))";
  }
}

}  // namespace ramsey::dsl

namespace ramsey {

namespace {

struct LiteralParser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  mpz_class number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    if (pos == start) throw ConfigError("point literal: number expected");
    return mpz_class(std::string(src.substr(start, pos - start)), 10);
  }

  Point parse(const Space& sp) {
    skip_ws();
    if (eat('(')) {
      std::vector<Point> elems;
      std::size_t i = 0;
      do {
        elems.push_back(parse_coord(sp, i++));
      } while (eat(','));
      if (!eat(')')) throw ConfigError("point literal: expected ')'");
      if (sp.is_product_like())
        return Point::tuple(std::move(elems)).normalized(sp);
      if (sp.kind() == Space::Kind::UnitCube) {
        std::vector<Dyadic> coords;
        for (const Point& p : elems) coords.push_back(p.cube_coords().front());
        return Point::cube(std::move(coords));
      }
      if (sp.kind() == Space::Kind::Cantor) {
        std::vector<std::uint8_t> bits;
        for (const Point& p : elems)
          bits.push_back(static_cast<std::uint8_t>(p.discrete_value()));
        const std::uint8_t tail = bits.empty() ? 0 : bits.back();
        return Point::cantor(std::move(bits), tail);
      }
      throw ConfigError("point literal: tuple given for scalar space");
    }
    return scalar(sp);
  }

  Point parse_coord(const Space& sp, std::size_t i) {
    switch (sp.kind()) {
      case Space::Kind::UnitCube: {
        Space line = Space::unit_cube(1);
        return scalar(line);
      }
      case Space::Kind::Cantor:
        return scalar(Space::finite_discrete(2));
      case Space::Kind::Product:
      case Space::Kind::OmegaPower:
        return parse(sp.coordinate_space(i));
      default:
        throw ConfigError("point literal: tuple given for scalar space");
    }
  }

  Point scalar(const Space& sp) {
    skip_ws();
    if (src.substr(pos, 3) == "inf") {
      pos += 3;
      if (sp.kind() != Space::Kind::OmegaPlusOne)
        throw ConfigError("point literal: 'inf' only in omega1");
      return Point::omega_infinity();
    }
    mpz_class num = number();
    if (eat('/')) {
      mpz_class den = number();
      if (den <= 0 || mpz_popcount(den.get_mpz_t()) != 1)
        throw ConfigError("point literal: denominator must be a power of two");
      const std::uint64_t exp = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
      if (sp.kind() != Space::Kind::UnitCube)
        throw ConfigError("point literal: fraction outside a cube space");
      return Point::cube({Dyadic::scaled(num, exp)});
    }
    switch (sp.kind()) {
      case Space::Kind::UnitCube:
        return Point::cube({Dyadic(num)});
      case Space::Kind::OmegaPlusOne: {
        if (!num.fits_ulong_p()) throw ConfigError("point literal: value too large");
        return Point::omega(num.get_ui());
      }
      case Space::Kind::FiniteDiscrete:
      case Space::Kind::Cantor: {
        if (!num.fits_ulong_p()) throw ConfigError("point literal: value too large");
        if (sp.kind() == Space::Kind::Cantor)
          return Point::cantor({static_cast<std::uint8_t>(num.get_ui())},
                               static_cast<std::uint8_t>(num.get_ui()));
        return Point::discrete(num.get_ui());
      }
      default:
        throw ConfigError("point literal: scalar given for product space");
    }
  }
};

}  // namespace

Point parse_point_literal(std::string_view src, const Space& sp) {
  LiteralParser p{src, 0};
  Point pt = p.parse(sp);
  p.skip_ws();
  if (p.pos != src.size()) throw ConfigError("point literal: trailing characters");
  if (!sp.contains(pt))
    throw ConfigError("point literal is not a member of " + sp.descriptor());
  return pt;
}

}  // namespace ramsey
