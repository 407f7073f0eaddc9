#include "dcreg/core/prime_field.hpp"

namespace dcreg {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(uint64_t p) {
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (p >= (1ULL << 31)) throw std::invalid_argument("modulus must be below 2^31");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  p_ = static_cast<uint32_t>(p);
}

bool PrimeField::sqrt(Fp a, Fp& out) const {
  if (a.is_zero()) {
    out = zero();
    return true;
  }
  if (a.pow((p_ - 1) / 2) != one()) return false;
  // Tonelli-Shanks
  uint32_t q = p_ - 1, s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  Fp z = (*this)(2);
  while (z.pow((p_ - 1) / 2) == one()) z += one();
  Fp c = z.pow(q), t = a.pow(q), r = a.pow((q + 1) / 2);
  uint32_t m = s;
  while (!t.is_one()) {
    uint32_t i = 0;
    Fp tt = t;
    while (!tt.is_one()) {
      tt *= tt;
      ++i;
    }
    Fp b = c;
    for (uint32_t k = 0; k + i + 1 < m; ++k) b *= b;
    m = i;
    c = b * b;
    t *= c;
    r *= b;
  }
  out = r;
  return true;
}

}  // namespace dcreg
