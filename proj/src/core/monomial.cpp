#include "dcreg/core/monomial.hpp"

#include <algorithm>

namespace dcreg {

namespace {

void fill(int n, int var, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur.set(var, left);
    out.push_back(cur);
    cur.set(var, 0);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.set(var, e);
    fill(n, var + 1, left - e, cur, out);
  }
  cur.set(var, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n < 0 || n > kMaxVars) throw std::out_of_range("variable count");
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  out.reserve(count_monomials(n, d));
  Monomial cur;
  fill(n, 0, d, cur, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

uint64_t count_monomials(int n, int d) {
  if (d < 0) return 0;
  if (n == 0) return d == 0 ? 1 : 0;
  // C(n-1+d, d)
  uint64_t r = 1;
  for (int i = 1; i <= n - 1; ++i) r = r * (d + i) / i;
  return r;
}

}  // namespace dcreg
