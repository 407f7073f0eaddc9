#pragma once

#include <stdexcept>
#include <vector>

#include "dcreg/core/rational.hpp"

// Small dense linear algebra over a field, used for frames, Gram matrices
// and kernels. Large rank problems go through macaulay/rank.hpp instead.
namespace dcreg {

template <class K>
using Matrix = std::vector<std::vector<K>>;

template <class K, class Field>
Matrix<K> zero_matrix(const Field& F, size_t r, size_t c) {
  return Matrix<K>(r, std::vector<K>(c, F.zero()));
}

template <class K, class Field>
Matrix<K> identity_matrix(const Field& F, size_t n) {
  auto A = zero_matrix<K>(F, n, n);
  for (size_t i = 0; i < n; ++i) A[i][i] = F.one();
  return A;
}

// Reduced row echelon form in place; returns pivot columns. Zero rows are
// moved to the bottom.
template <class K>
std::vector<int> rref(Matrix<K>& A) {
  std::vector<int> piv;
  if (A.empty()) return piv;
  size_t rows = A.size(), cols = A[0].size(), r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i)
      if (!scalar_traits<K>::is_zero(A[i][c])) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(A[r], A[sel]);
    K inv = inverse(A[r][c]);
    for (size_t j = c; j < cols; ++j) A[r][j] = A[r][j] * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || scalar_traits<K>::is_zero(A[i][c])) continue;
      K f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] = A[i][j] - f * A[r][j];
    }
    piv.push_back(static_cast<int>(c));
    ++r;
  }
  return piv;
}

template <class K>
int matrix_rank(Matrix<K> A) {
  return static_cast<int>(rref(A).size());
}

// Basis of {x : A x = 0}.
template <class K, class Field>
Matrix<K> kernel_basis(Matrix<K> A, size_t cols, const Field& F) {
  Matrix<K> out;
  std::vector<int> piv = A.empty() ? std::vector<int>{} : rref(A);
  std::vector<int> is_piv(cols, -1);
  for (size_t r = 0; r < piv.size(); ++r) is_piv[piv[r]] = static_cast<int>(r);
  for (size_t c = 0; c < cols; ++c) {
    if (is_piv[c] >= 0) continue;
    std::vector<K> v(cols, F.zero());
    v[c] = F.one();
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -A[r][c];
    out.push_back(std::move(v));
  }
  return out;
}

template <class K, class Field>
K determinant(Matrix<K> A, const Field& F) {
  size_t n = A.size();
  K det = F.one();
  for (size_t c = 0; c < n; ++c) {
    size_t sel = n;
    for (size_t i = c; i < n; ++i)
      if (!scalar_traits<K>::is_zero(A[i][c])) {
        sel = i;
        break;
      }
    if (sel == n) return F.zero();
    if (sel != c) {
      std::swap(A[sel], A[c]);
      det = -det;
    }
    det = det * A[c][c];
    K inv = inverse(A[c][c]);
    for (size_t i = c + 1; i < n; ++i) {
      if (scalar_traits<K>::is_zero(A[i][c])) continue;
      K f = A[i][c] * inv;
      for (size_t j = c; j < n; ++j) A[i][j] = A[i][j] - f * A[c][j];
    }
  }
  return det;
}

// throws if A is singular
template <class K, class Field>
Matrix<K> inverse_matrix(const Matrix<K>& A, const Field& F) {
  size_t n = A.size();
  Matrix<K> aug(n, std::vector<K>(2 * n, F.zero()));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
    aug[i][n + i] = F.one();
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != static_cast<int>(n - 1)) throw std::domain_error("singular matrix");
  Matrix<K> out(n, std::vector<K>(n, F.zero()));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) out[i][j] = aug[i][n + j];
  return out;
}

template <class K, class Field>
Matrix<K> mat_mul(const Matrix<K>& A, const Matrix<K>& B, const Field& F) {
  size_t r = A.size(), k = B.size(), c = B.empty() ? 0 : B[0].size();
  auto C = zero_matrix<K>(F, r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t t = 0; t < k; ++t) {
      if (scalar_traits<K>::is_zero(A[i][t])) continue;
      for (size_t j = 0; j < c; ++j) C[i][j] = C[i][j] + A[i][t] * B[t][j];
    }
  return C;
}

}  // namespace dcreg
