#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "dcreg/core/prime_field.hpp"

namespace dcreg {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

class RationalField {
 public:
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational operator()(int64_t x) const { return Rational(x); }
  std::string name() const { return "QQ"; }
  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

BigInt binomial(int64_t n, int64_t k);
BigInt factorial(int64_t n);

// parse "a" or "a/b"
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

// reduction of a rational into F_p; throws if p divides the denominator
Fp reduce(const Rational& q, const PrimeField& F);
Fp reduce(const BigInt& z, const PrimeField& F);

// uniform conversion used by generic code
inline Fp convert(const Rational& q, const PrimeField& F) { return reduce(q, F); }
inline Rational convert(const Rational& q, const RationalField&) { return q; }

inline Fp inverse(const Fp& a) { return a.inv(); }
inline Rational inverse(const Rational& q) {
  if (q == 0) throw std::domain_error("inverse of zero rational");
  return Rational(1) / q;
}

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Fp> {
  using field_type = PrimeField;
  static bool is_zero(const Fp& a) { return a.v == 0; }
  static bool is_one(const Fp& a) { return a.v == 1; }
  static std::string to_string(const Fp& a) { return std::to_string(a.centered()); }
  static bool is_negative(const Fp& a) { return a.centered() < 0; }
};

template <>
struct scalar_traits<Rational> {
  using field_type = RationalField;
  static bool is_zero(const Rational& a) { return a == 0; }
  static bool is_one(const Rational& a) { return a == 1; }
  static std::string to_string(const Rational& a) { return dcreg::to_string(a); }
  static bool is_negative(const Rational& a) { return a < 0; }
};

}  // namespace dcreg
