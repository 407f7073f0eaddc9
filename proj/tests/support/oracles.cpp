#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<int> digits(int a, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i, a /= 3) d[i] = a % 3;
  return d;
}

int from_digits(const std::vector<int>& d) {
  int a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = 3 * a + d[i];
  return a;
}

// product of a and b modulo the monic polynomial x^k + sum low[i] x^i
int poly_mulmod(int a, int b, int k, const std::vector<int>& low) {
  auto da = digits(a, k), db = digits(b, k);
  std::vector<int> c(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c[i + j] = (c[i + j] + da[i] * db[j]) % 3;
  for (int t = 2 * k - 1; t >= k; --t) {
    int lead = c[t];
    if (!lead) continue;
    c[t] = 0;
    for (int i = 0; i < k; ++i) c[t - k + i] = ((c[t - k + i] - lead * low[i]) % 3 + 3) % 3;
  }
  c.resize(k);
  return from_digits(c);
}

}  // namespace

GF3k::GF3k(int k) : k_(k), q_(1) {
  if (k < 1 || k > 4) throw std::invalid_argument("GF3k: k in 1..4");
  for (int i = 0; i < k; ++i) q_ *= 3;
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) {
      auto da = digits(a, k), db = digits(b, k);
      for (int i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % 3;
      add_[a * q_ + b] = from_digits(da);
    }
  // first modulus without zero divisors is irreducible
  for (int code = 0; code < q_; ++code) {
    auto low = digits(code, k);
    bool field = true;
    for (int a = 1; a < q_ && field; ++a)
      for (int b = 1; b < q_; ++b) {
        int c = poly_mulmod(a, b, k, low);
        mul_[a * q_ + b] = c;
        if (c == 0) {
          field = false;
          break;
        }
      }
    if (field) {
      for (int a = 0; a < q_; ++a) mul_[a] = mul_[a * q_] = 0;
      return;
    }
  }
  throw std::logic_error("GF3k: no irreducible modulus found");
}

int64_t projective_zero_count(const std::vector<dcreg::PolyFp>& polys, int nvars, const GF3k& F) {
  const int q = F.size();
  int64_t count = 0;
  std::vector<int> x(nvars);
  // representatives with first nonzero coordinate equal to 1
  for (int lead = 0; lead < nvars; ++lead) {
    int64_t tail = 1;
    for (int i = lead + 1; i < nvars; ++i) tail *= q;
    for (int64_t t = 0; t < tail; ++t) {
      std::fill(x.begin(), x.end(), 0);
      x[lead] = 1;
      int64_t r = t;
      for (int i = lead + 1; i < nvars; ++i, r /= q) x[i] = static_cast<int>(r % q);
      bool zero = true;
      for (const auto& P : polys) {
        int acc = 0;
        for (const auto& term : P.terms()) {
          int v = static_cast<int>(term.coef.v % 3);
          for (int i = 0; i < nvars && v; ++i)
            for (int e = 0; e < term.mono[i]; ++e) v = F.mul(v, x[i]);
          acc = F.add(acc, v);
        }
        if (acc) {
          zero = false;
          break;
        }
      }
      if (zero) ++count;
    }
  }
  return count;
}

bool regular_by_point_count(const std::vector<dcreg::PolyFp>& polys, const std::vector<int>& degrees, int nvars) {
  const int c = static_cast<int>(polys.size());
  if (c == 0) return true;
  if (nvars > 3 || c > nvars) throw std::invalid_argument("oracle: shape out of range");
  int64_t bezout = 1;
  for (int d : degrees) bezout *= d;
  std::vector<int64_t> counts, totals;
  for (int k = 1; k <= 4; ++k) {
    GF3k F(k);
    counts.push_back(projective_zero_count(polys, nvars, F));
    int64_t tot = 0, pw = 1;
    for (int i = 0; i < nvars; ++i, pw *= F.size()) tot += pw;
    totals.push_back(tot);
  }
  int expected_dim = nvars - 1 - c;
  for (size_t i = 0; i < counts.size(); ++i) {
    // empty zero set expected: any point over any F_{3^k}, k <= 4, is a witness
    if (expected_dim == -1 && counts[i] > 0) return false;
    // finite zero set expected: Bezout bounds it unless a curve is shared
    if (expected_dim == 0 && counts[i] > bezout) return false;
    // hypersurface expected: only the zero form vanishes everywhere
    if (expected_dim >= 1 && counts[i] == totals[i]) return false;
  }
  return true;
}

std::vector<Rational> newton_sqrt_series(int n) {
  auto mul = [n](const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> c(n + 1, Rational(0));
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  auto inv = [n](const std::vector<Rational>& a) {
    std::vector<Rational> b(n + 1, Rational(0));
    b[0] = 1 / a[0];
    for (int i = 1; i <= n; ++i) {
      Rational s = 0;
      for (int j = 1; j <= i; ++j) s += a[j] * b[i - j];
      b[i] = -s / a[0];
    }
    return b;
  };
  std::vector<Rational> one_plus_t(n + 1, Rational(0)), x(n + 1, Rational(0));
  one_plus_t[0] = 1;
  if (n >= 1) one_plus_t[1] = 1;
  x[0] = 1;
  // each step doubles the number of correct coefficients
  for (int it = 0; (1 << it) <= 2 * (n + 1); ++it) {
    auto y = mul(one_plus_t, inv(x));
    for (int i = 0; i <= n; ++i) x[i] = (x[i] + y[i]) / 2;
  }
  return x;
}

Rational product_term_by_term(const std::vector<int>& ks) {
  Rational r = 1;
  for (int k : ks) r *= Rational(k + 1, k);
  return r;
}

std::vector<int> schedule_by_hand(int m, int l) {
  std::vector<int> ks;
  for (int k = 1; k <= m - 1; ++k) ks.push_back(k);
  for (int k = l; k <= 2 * l - 2; ++k) ks.push_back(k);
  std::sort(ks.begin(), ks.end());
  return ks;
}

int64_t hilbert_function_dense(const std::vector<dcreg::PolyFp>& gens, int nvars, int d) {
  // monomials of degree e as exponent vectors
  auto monos = [nvars](int e) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(nvars, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == nvars - 1) {
        cur[i] = left;
        out.push_back(cur);
        return;
      }
      for (int a = left; a >= 0; --a) {
        cur[i] = a;
        self(self, i + 1, left - a);
      }
    };
    if (nvars == 0) {
      if (e == 0) out.push_back({});
      return out;
    }
    rec(rec, 0, e);
    return out;
  };
  auto cols = monos(d);
  std::map<std::vector<int>, size_t> col_of;
  for (size_t i = 0; i < cols.size(); ++i) col_of[cols[i]] = i;
  if (gens.empty()) return static_cast<int64_t>(cols.size());
  const uint64_t p = gens.front().ring()->field().modulus();
  std::vector<std::vector<uint64_t>> rows;
  for (const auto& g : gens) {
    int dg = g.degree();
    if (dg < 0 || dg > d) continue;
    for (const auto& mult : monos(d - dg)) {
      std::vector<uint64_t> row(cols.size(), 0);
      for (const auto& t : g.terms()) {
        std::vector<int> e(nvars);
        for (int i = 0; i < nvars; ++i) e[i] = t.mono[i] + mult[i];
        size_t c = col_of.at(e);
        row[c] = (row[c] + t.coef.v) % p;
      }
      rows.push_back(std::move(row));
    }
  }
  auto powmod = [p](uint64_t a, uint64_t e) {
    uint64_t r = 1;
    for (a %= p; e; e >>= 1, a = a * a % p)
      if (e & 1) r = r * a % p;
    return r;
  };
  size_t rank = 0;
  for (size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
    size_t sel = rank;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[rank]);
    uint64_t inv = powmod(rows[rank][c], p - 2);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      if (!rows[i][c]) continue;
      uint64_t f = rows[i][c] * inv % p;
      for (size_t j = c; j < cols.size(); ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[rank][j]) % p;
    }
    ++rank;
  }
  return static_cast<int64_t>(cols.size() - rank);
}

}  // namespace oracle
