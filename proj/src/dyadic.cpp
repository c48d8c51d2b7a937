#include "ramsey/dyadic.hpp"

namespace ramsey {

Dyadic Dyadic::pow2neg(std::uint64_t e) {
  if (e > kMaxExponent)
    throw EvalError("dyadic exponent too large: 2^-" + std::to_string(e));
  mpq_class r(1);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  return Dyadic(std::move(r));
}

Dyadic Dyadic::scaled(const mpz_class& num, std::uint64_t exp) {
  if (exp > kMaxExponent)
    throw EvalError("dyadic exponent too large: /2^" + std::to_string(exp));
  mpq_class r(num);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(exp));
  return Dyadic(std::move(r));
}

Dyadic Dyadic::abs() const {
  mpq_class r;
  mpq_abs(r.get_mpq_t(), v_.get_mpq_t());
  return Dyadic(std::move(r));
}

std::uint64_t Dyadic::exponent() const {
  const mpz_class den = v_.get_den();
  // Canonical mpq denominators of dyadics are powers of two.
  return mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
}

std::string Dyadic::str() const {
  const std::uint64_t e = exponent();
  std::string n = numerator().get_str();
  if (e == 0) return n;
  return n + "/2^" + std::to_string(e);
}

}  // namespace ramsey
