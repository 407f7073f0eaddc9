#include "dcreg/core/rational.hpp"

#include <cctype>

namespace dcreg {

BigInt binomial(int64_t n, int64_t k) {
  if (k < 0 || n < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

BigInt factorial(int64_t n) {
  BigInt r = 1;
  for (int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

static BigInt parse_integer(const std::string& s) {
  size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw std::invalid_argument("bad integer '" + s + "'");
  return BigInt(s[0] == '+' ? s.substr(1) : s);
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  BigInt num = parse_integer(s.substr(0, slash));
  BigInt den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& q) { return q.str(); }

Fp reduce(const BigInt& z, const PrimeField& F) {
  BigInt r = z % F.modulus();
  if (r < 0) r += F.modulus();
  return F.from_u64(r.convert_to<uint64_t>());
}

Fp reduce(const Rational& q, const PrimeField& F) {
  Fp den = reduce(boost::multiprecision::denominator(q), F);
  if (den.is_zero())
    throw std::domain_error("denominator of " + q.str() + " vanishes mod " + std::to_string(F.modulus()));
  return reduce(boost::multiprecision::numerator(q), F) / den;
}

}  // namespace dcreg
