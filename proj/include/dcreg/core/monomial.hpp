#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <vector>

namespace dcreg {

inline constexpr int kMaxVars = 32;

// Exponent vector with fixed capacity. Entries past the ring's variable
// count are always zero, so comparisons never need the count.
class Monomial {
 public:
  Monomial() { e_.fill(0); }

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  int operator[](int i) const { return e_[i]; }
  int degree() const { return deg_; }
  void set(int i, int value) {
    if (value < 0 || value > 255) throw std::out_of_range("exponent out of range");
    deg_ = static_cast<uint16_t>(deg_ - e_[i] + value);
    e_[i] = static_cast<uint8_t>(value);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      unsigned s = unsigned(a.e_[i]) + b.e_[i];
      if (s > 255) throw std::overflow_error("exponent overflow");
      r.e_[i] = static_cast<uint8_t>(s);
    }
    r.deg_ = static_cast<uint16_t>(a.deg_ + b.deg_);
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  // requires divides(o)
  Monomial quotient_of(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = static_cast<uint8_t>(o.e_[i] - e_[i]);
    r.deg_ = static_cast<uint16_t>(o.deg_ - deg_);
    return r;
  }

  // highest variable index with nonzero exponent, -1 for the unit
  int last_var() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (e_[i]) return i;
    return -1;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.deg_ == b.deg_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

  size_t hash() const {
    uint64_t w[4];
    std::memcpy(w, e_.data(), sizeof(w));
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t x : w) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ULL;
    }
    return static_cast<size_t>(h ^ (h >> 31));
  }

 private:
  std::array<uint8_t, kMaxVars> e_;
  uint16_t deg_ = 0;
};

// Graded reverse lexicographic comparison: negative if a < b, positive if a > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

// All monomials of degree d in n variables, grevlex descending.
std::vector<Monomial> monomials_of_degree(int n, int d);

// Number of monomials of degree d in n variables (fits in 64 bits for our sizes).
uint64_t count_monomials(int n, int d);

}  // namespace dcreg
