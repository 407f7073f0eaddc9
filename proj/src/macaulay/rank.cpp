#include "dcreg/macaulay/rank.hpp"

#include <cblas.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dcreg::macaulay {

namespace {

uint64_t inv_mod(uint64_t a, uint64_t p) {
  int64_t x0 = 1, x1 = 0, r0 = static_cast<int64_t>(a % p), r1 = static_cast<int64_t>(p);
  while (r1) {
    int64_t q = r0 / r1, t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (r0 != 1) throw std::domain_error("inv_mod: not invertible");
  return static_cast<uint64_t>(x0 < 0 ? x0 + static_cast<int64_t>(p) : x0);
}

inline double mod_d(double x, double p) {
  double r = std::fmod(x, p);
  return r < 0 ? r + p : r;
}

constexpr size_t kPanel = 64;

}  // namespace

size_t dense_rank_mod_p_scalar(std::vector<uint64_t>& a, size_t rows, size_t cols, uint32_t p) {
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i)
      if (a[i * cols + c] % p) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (size_t j = c; j < cols; ++j) std::swap(a[sel * cols + j], a[r * cols + j]);
    uint64_t inv = inv_mod(a[r * cols + c] % p, p);
    for (size_t j = c; j < cols; ++j) a[r * cols + j] = a[r * cols + j] % p * inv % p;
    for (size_t i = r + 1; i < rows; ++i) {
      uint64_t f = a[i * cols + c] % p;
      if (!f) continue;
      uint64_t nf = p - f;
      for (size_t j = c; j < cols; ++j) a[i * cols + j] = (a[i * cols + j] + nf * a[r * cols + j]) % p;
    }
    ++r;
  }
  return r;
}

size_t dense_rank_mod_p(std::vector<double>& a, size_t rows, size_t cols, uint32_t p) {
  if (rows == 0 || cols == 0) return 0;
  const double P = p;
  // Every trailing entry absorbs at most cols * p^2 in magnitude over the
  // whole elimination; keep that exactly representable.
  if (double(cols + kPanel) * P * P >= 4503599627370496.0) {
    std::vector<uint64_t> b(a.size());
    for (size_t i = 0; i < a.size(); ++i) b[i] = static_cast<uint64_t>(mod_d(a[i], P));
    return dense_rank_mod_p_scalar(b, rows, cols, p);
  }
  const size_t n = cols;
  auto at = [&](size_t i, size_t j) -> double& { return a[i * n + j]; };
  size_t r = 0;
  std::vector<size_t> pcols;
  std::vector<double> Lbuf, Ubuf;
  for (size_t c0 = 0; c0 < cols && r < rows; c0 += kPanel) {
    size_t c1 = std::min(cols, c0 + kPanel);
    for (size_t i = r; i < rows; ++i)
      for (size_t j = c0; j < c1; ++j) at(i, j) = mod_d(at(i, j), P);
    pcols.clear();
    size_t k = 0;
    // Inside the panel only the pivot column and pivot row are reduced; the
    // other entries take at most kPanel unreduced updates of size p^2.
    for (size_t j = c0; j < c1 && r + k < rows; ++j) {
      size_t sel = rows;
      for (size_t i = r + k; i < rows; ++i) {
        double& v = at(i, j);
        v = mod_d(v, P);
        if (sel == rows && v != 0.0) sel = i;
      }
      if (sel == rows) continue;
      size_t pr = r + k;
      if (sel != pr) std::swap_ranges(a.begin() + sel * n, a.begin() + (sel + 1) * n, a.begin() + pr * n);
      for (size_t jj = j; jj < c1; ++jj) at(pr, jj) = mod_d(at(pr, jj), P);
      uint64_t inv = inv_mod(static_cast<uint64_t>(at(pr, j)), p);
      const double* prow = &at(pr, 0);
      for (size_t i = pr + 1; i < rows; ++i) {
        double v = at(i, j);
        if (v == 0.0) continue;
        double md = static_cast<double>(static_cast<uint64_t>(v) * inv % p);
        double* row = &at(i, 0);
        row[j] = md;  // multiplier kept in place
        for (size_t jj = j + 1; jj < c1; ++jj) row[jj] -= md * prow[jj];
      }
      pcols.push_back(j);
      ++k;
    }
    if (k == 0) continue;
    size_t tc = cols - c1;
    size_t below = rows - r - k;
    if (tc > 0) {
      // trailing part of the pivot rows: U_t = row_t - sum_{s<t} L_ts U_s
      Ubuf.assign(k * tc, 0.0);
      for (size_t t = 0; t < k; ++t) {
        double* u = &Ubuf[t * tc];
        const double* src = &at(r + t, c1);
        for (size_t j = 0; j < tc; ++j) u[j] = mod_d(src[j], P);
        for (size_t s = 0; s < t; ++s) {
          double f = at(r + t, pcols[s]);
          if (f == 0.0) continue;
          const double* us = &Ubuf[s * tc];
          for (size_t j = 0; j < tc; ++j) u[j] -= f * us[j];
        }
        for (size_t j = 0; j < tc; ++j) u[j] = mod_d(u[j], P);
      }
      if (below > 0) {
        Lbuf.assign(below * k, 0.0);
        for (size_t i = 0; i < below; ++i)
          for (size_t s = 0; s < k; ++s) Lbuf[i * k + s] = at(r + k + i, pcols[s]);
        cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(below), static_cast<int>(tc),
                    static_cast<int>(k), -1.0, Lbuf.data(), static_cast<int>(k), Ubuf.data(), static_cast<int>(tc), 1.0,
                    &at(r + k, c1), static_cast<int>(n));
      }
    }
    r += k;
  }
  return r;
}

size_t rank_mod_p(const std::vector<SparseRow>& rows, size_t ncols, uint32_t p, RankStats* stats) {
  if (ncols == 0) return 0;
  // structural pivots: the sparsest row for every leading column
  std::vector<int64_t> pivot_of(ncols, -1);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].cols.empty()) continue;
    uint32_t lead = rows[i].cols[0];
    if (lead >= ncols) throw std::out_of_range("rank_mod_p: column index");
    int64_t& cur = pivot_of[lead];
    if (cur < 0 || rows[i].cols.size() < rows[cur].cols.size()) cur = static_cast<int64_t>(i);
  }
  std::vector<bool> is_pivot_row(rows.size(), false);
  std::vector<int64_t> dense_col(ncols, -1);
  size_t npiv = 0, ndense_cols = 0;
  for (size_t c = 0; c < ncols; ++c) {
    if (pivot_of[c] >= 0) {
      is_pivot_row[pivot_of[c]] = true;
      ++npiv;
    } else {
      dense_col[c] = static_cast<int64_t>(ndense_cols++);
    }
  }
  // normalized pivot rows (leading coefficient 1)
  std::vector<std::vector<uint32_t>> pvals(ncols);
  for (size_t c = 0; c < ncols; ++c) {
    if (pivot_of[c] < 0) continue;
    const SparseRow& row = rows[pivot_of[c]];
    uint64_t inv = inv_mod(row.vals[0], p);
    auto& v = pvals[c];
    v.resize(row.vals.size());
    for (size_t t = 0; t < v.size(); ++t) v[t] = static_cast<uint32_t>(row.vals[t] * inv % p);
  }
  std::vector<size_t> rest;
  for (size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].cols.empty() && !is_pivot_row[i]) rest.push_back(i);
  if (stats) {
    stats->structural_pivots = npiv;
    stats->dense_rows = rest.size();
    stats->dense_cols = ndense_cols;
  }
  if (rest.empty() || ndense_cols == 0) return npiv;

  const bool lazy = uint64_t(p) < (1u << 16);
  std::vector<double> dense(rest.size() * ndense_cols, 0.0);
  std::vector<uint64_t> acc(ncols, 0);
  size_t drow = 0;
  for (size_t idx : rest) {
    const SparseRow& row = rows[idx];
    for (size_t t = 0; t < row.cols.size(); ++t) acc[row.cols[t]] = row.vals[t];
    size_t lead = row.cols[0];
    bool nonzero = false;
    double* out = &dense[drow * ndense_cols];
    for (size_t c = lead; c < ncols; ++c) {
      uint64_t v = acc[c];
      if (!v) continue;
      acc[c] = 0;
      v %= p;
      if (!v) continue;
      if (pivot_of[c] < 0) {
        out[dense_col[c]] = static_cast<double>(v);
        nonzero = true;
        continue;
      }
      uint64_t f = p - v;
      const SparseRow& prow = rows[pivot_of[c]];
      const auto& pv = pvals[c];
      if (lazy) {
        for (size_t t = 1; t < pv.size(); ++t) acc[prow.cols[t]] += f * pv[t];
      } else {
        for (size_t t = 1; t < pv.size(); ++t) acc[prow.cols[t]] = (acc[prow.cols[t]] + f * pv[t]) % p;
      }
    }
    if (nonzero) ++drow;
  }
  dense.resize(drow * ndense_cols);
  return npiv + dense_rank_mod_p(dense, drow, ndense_cols, p);
}

}  // namespace dcreg::macaulay
