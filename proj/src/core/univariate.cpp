#include "dcreg/core/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcreg::univariate {

void trim(UPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

int degree(const UPoly& a) {
  UPoly b = a;
  trim(b);
  return static_cast<int>(b.size()) - 1;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly c(a.size() + b.size() - 1, Fp(0, a[0].p));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

UPoly mod(UPoly a, const UPoly& b) {
  trim(a);
  if (b.empty() || b.back().is_zero()) throw std::domain_error("univariate mod by zero");
  Fp inv = b.back().inv();
  while (a.size() >= b.size()) {
    Fp f = a.back() * inv;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Fp inv = a.back().inv();
    for (auto& c : a) c *= inv;
  }
  return a;
}

UPoly derivative(const UPoly& a) {
  UPoly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Fp(static_cast<uint32_t>(i % a[i].p), a[i].p));
  trim(d);
  return d;
}

UPoly powmod_x(uint64_t e, const UPoly& h, const PrimeField& F) {
  UPoly r = {F.one()}, b = mod({F.zero(), F.one()}, h);
  r = mod(r, h);
  while (e) {
    if (e & 1) r = mod(mul(r, b), h);
    e >>= 1;
    if (e) b = mod(mul(b, b), h);
  }
  return r;
}

namespace {

// a monic, squarefree, product of distinct linear factors
void split(const UPoly& a, const PrimeField& F, const std::function<uint32_t()>& next, std::vector<uint32_t>& out) {
  int d = degree(a);
  if (d <= 0) return;
  if (d == 1) {
    out.push_back((-(a[0] / a[1])).v);
    return;
  }
  uint64_t p = F.modulus();
  for (int attempt = 0; attempt < 200; ++attempt) {
    // gcd(a, (x + c)^((p-1)/2) - 1)
    Fp c = F.from_u64(next());
    UPoly r = {F.one()}, b = mod({c, F.one()}, a);
    for (uint64_t e = (p - 1) / 2; e; e >>= 1) {
      if (e & 1) r = mod(mul(r, b), a);
      if (e > 1) b = mod(mul(b, b), a);
    }
    if (r.empty()) r = {F.zero()};
    r[0] -= F.one();
    trim(r);
    UPoly h = gcd(a, r);
    int dh = degree(h);
    if (dh > 0 && dh < d) {
      split(h, F, next, out);
      // exact division a / h
      UPoly quo(d - dh + 1, F.zero());
      UPoly rem = a;
      Fp inv = h.back().inv();
      while (degree(rem) >= dh) {
        int k = degree(rem) - dh;
        Fp f = rem[degree(rem)] * inv;
        quo[k] = f;
        for (int i = 0; i <= dh; ++i) rem[k + i] -= f * h[i];
        trim(rem);
      }
      trim(quo);
      split(quo, F, next, out);
      return;
    }
  }
  throw std::runtime_error("root splitting did not converge");
}

}  // namespace

std::vector<uint32_t> roots(UPoly a, const PrimeField& F, const std::function<uint32_t()>& next) {
  trim(a);
  std::vector<uint32_t> out;
  if (degree(a) <= 0) return out;
  if (F.modulus() == 2) throw std::invalid_argument("p = 2 not supported");
  // product of the distinct linear factors: gcd(a, x^p - x)
  UPoly xp = powmod_x(F.modulus(), a, F);
  if (xp.size() < 2) xp.resize(2, F.zero());
  xp[1] -= F.one();
  trim(xp);
  UPoly lin = gcd(a, xp);  // gcd(a, 0) is a made monic
  split(lin, F, next, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dcreg::univariate
