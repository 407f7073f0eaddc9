#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dcreg {

// Element of F_p. The modulus travels with the value so that polynomials
// and matrices do not need a separate context for arithmetic.
struct Fp {
  uint32_t v = 0;
  uint32_t p = 0;

  constexpr Fp() = default;
  constexpr Fp(uint32_t value, uint32_t modulus) : v(value), p(modulus) {}

  bool is_zero() const { return v == 0; }
  bool is_one() const { return v == 1; }

  friend Fp operator+(Fp a, Fp b) {
    uint32_t s = a.v + b.v;
    if (s >= a.p) s -= a.p;
    return {s, a.p};
  }
  friend Fp operator-(Fp a, Fp b) {
    return {a.v >= b.v ? a.v - b.v : a.v + a.p - b.v, a.p};
  }
  friend Fp operator*(Fp a, Fp b) {
    return {static_cast<uint32_t>(uint64_t(a.v) * b.v % a.p), a.p};
  }
  Fp operator-() const { return {v == 0 ? 0 : p - v, p}; }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp pow(uint64_t e) const {
    Fp r{1 % p, p}, b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  Fp inv() const {
    if (v == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid; p < 2^31 so int64 is enough
    int64_t a = v, b = p, x0 = 1, x1 = 0;
    while (b) {
      int64_t q = a / b;
      int64_t t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    if (x0 < 0) x0 += p;
    return {static_cast<uint32_t>(x0), p};
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inv(); }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
  friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

  // symmetric representative in (-p/2, p/2]
  int64_t centered() const { return v > p / 2 ? int64_t(v) - int64_t(p) : int64_t(v); }
};

bool is_prime(uint64_t n);

class PrimeField {
 public:
  PrimeField() = default;
  explicit PrimeField(uint64_t p);

  uint32_t modulus() const { return p_; }
  Fp zero() const { return {0, p_}; }
  Fp one() const { return {1, p_}; }
  Fp operator()(int64_t x) const {
    int64_t r = x % int64_t(p_);
    if (r < 0) r += p_;
    return {static_cast<uint32_t>(r), p_};
  }
  Fp from_u64(uint64_t x) const { return {static_cast<uint32_t>(x % p_), p_}; }
  // square root if one exists (Tonelli-Shanks); returns false otherwise
  bool sqrt(Fp a, Fp& out) const;
  std::string name() const { return "F_" + std::to_string(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  uint32_t p_ = 0;
};

}  // namespace dcreg
