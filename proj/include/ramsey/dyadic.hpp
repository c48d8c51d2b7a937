#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

// Exact dyadic rational num/2^exp, kept canonical by GMP (numerator odd or
// zero). Every metric value in the library is a Dyadic; there is no floating
// point anywhere, so certificate checks are exact integer comparisons.
class Dyadic {
 public:
  // Shift amounts beyond this are rejected; it bounds the size of any
  // intermediate numerator produced by mixed-scale additions.
  static constexpr std::uint64_t kMaxExponent = 1u << 20;

  Dyadic() : v_(0) {}
  explicit Dyadic(long v) : v_(v) {}
  explicit Dyadic(const mpz_class& v) : v_(v) {}

  static Dyadic pow2neg(std::uint64_t e);                        // 2^-e
  static Dyadic scaled(const mpz_class& num, std::uint64_t exp); // num/2^exp
  static Dyadic one() { return Dyadic(1); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    return Dyadic(mpq_class(a.v_ + b.v_));
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    return Dyadic(mpq_class(a.v_ - b.v_));
  }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(mpq_class(a.v_ * b.v_));
  }

  Dyadic abs() const;
  static Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
  static Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a.v_, b.v_) >= 0; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  mpz_class numerator() const { return v_.get_num(); }
  std::uint64_t exponent() const;  // log2 of the (power-of-two) denominator
  const mpq_class& rational() const { return v_; }

  std::string str() const;  // "num" or "num/2^exp"

 private:
  explicit Dyadic(mpq_class q) : v_(std::move(q)) {}
  mpq_class v_;
};

}  // namespace ramsey
