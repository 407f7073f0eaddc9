#include "dcreg/macaulay/saturation.hpp"

#include <stdexcept>

namespace dcreg::macaulay {

PolyFp linear_form(const RingPtr<Fp>& ring, const std::vector<Fp>& coeffs) {
  std::vector<PolyFp::Term> terms;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) terms.push_back({Monomial::var(static_cast<int>(i)), coeffs[i]});
  return PolyFp::from_terms(ring, std::move(terms));
}

namespace {

// L_e for an ideal without linear generators, in its own coordinates
Matrix<Fp> linear_part_at(const LinearReduction& red, int e) {
  const PrimeField& F = red.ring->field();
  int n = red.ring->nvars();
  MonomialIndex top(n, e + 1);
  size_t N = top.size();
  Matrix<Fp> A;
  for (const auto& row : macaulay_rows(red.generators, n, top, e + 1)) {
    std::vector<Fp> dense(N, F.zero());
    for (size_t t = 0; t < row.cols.size(); ++t) dense[row.cols[t]] = Fp(row.vals[t], F.modulus());
    A.push_back(std::move(dense));
  }
  std::vector<int> piv = A.empty() ? std::vector<int>{} : rref(A);
  std::vector<int> pivot_row(N, -1), free_pos(N, -1);
  for (size_t r = 0; r < piv.size(); ++r) pivot_row[piv[r]] = static_cast<int>(r);
  int nfree = 0;
  for (size_t c = 0; c < N; ++c)
    if (pivot_row[c] < 0) free_pos[c] = nfree++;
  if (nfree == 0) return identity_matrix<Fp>(F, n);
  // normal form of column c in free coordinates
  auto nf_add = [&](std::vector<Fp>& out, size_t base, size_t c, Fp scale) {
    if (pivot_row[c] < 0) {
      out[base + free_pos[c]] += scale;
      return;
    }
    const auto& prow = A[pivot_row[c]];
    for (size_t j = 0; j < N; ++j)
      if (free_pos[j] >= 0 && !prow[j].is_zero()) out[base + free_pos[j]] -= scale * prow[j];
  };
  auto low = monomials_of_degree(n, e);
  // columns: coefficients a_i; rows: (m, free coordinate)
  Matrix<Fp> M(low.size() * nfree, std::vector<Fp>(n, F.zero()));
  for (int i = 0; i < n; ++i) {
    std::vector<Fp> col(low.size() * nfree, F.zero());
    for (size_t k = 0; k < low.size(); ++k) nf_add(col, k * nfree, top.at(low[k] * Monomial::var(i)), F.one());
    for (size_t r = 0; r < col.size(); ++r) M[r][i] = col[r];
  }
  return kernel_basis(M, n, F);
}

}  // namespace

SaturatedLinearPart saturated_linear_forms(const GradedIdeal& I, int e_max) {
  if (e_max < 0) throw std::invalid_argument("saturated_linear_forms: negative level");
  const PrimeField& F = I.ring()->field();
  int n = I.nvars();
  LinearReduction red = reduce_linear(I);
  std::vector<int> target_to_source;
  for (int j = 0; j < red.ring->nvars(); ++j) target_to_source.push_back(I.ring()->index_of(red.ring->name(j)));
  SaturatedLinearPart out;
  Matrix<Fp> prev;
  for (int e = 0; e <= e_max; ++e) {
    Matrix<Fp> basis = red.linear_basis;
    for (const auto& v : linear_part_at(red, e)) {
      std::vector<Fp> lifted(n, F.zero());
      for (size_t j = 0; j < v.size(); ++j) lifted[target_to_source[j]] = v[j];
      basis.push_back(std::move(lifted));
    }
    if (!basis.empty()) basis.resize(rref(basis).size());
    out.dims.push_back(static_cast<int>(basis.size()));
    if (e > 0 && basis.size() == prev.size()) {
      out.basis = prev;
      out.level = e - 1;
      out.stabilized = true;
      return out;
    }
    prev = std::move(basis);
  }
  out.basis = prev;
  out.level = e_max;
  out.stabilized = false;
  return out;
}

bool membership_by_degree(const LinearReduction& red, const PolyFp& P, int e) {
  if (e < 0) throw std::invalid_argument("membership_by_degree: negative level");
  if (P.is_zero()) return true;
  if (!P.is_homogeneous()) throw std::invalid_argument("membership_by_degree: P is not homogeneous");
  PolyFp Q = red.reduce(P);
  if (Q.is_zero()) return true;
  int n = red.ring->nvars();
  int D = Q.degree() + e;
  MonomialIndex index(n, D);
  auto rows = macaulay_rows(red.generators, n, index, D);
  uint32_t p = red.ring->field().modulus();
  size_t base = rank_mod_p(rows, index.size(), p);
  if (base == index.size()) return true;
  auto extra = macaulay_rows({Q}, n, index, D);
  rows.insert(rows.end(), extra.begin(), extra.end());
  return rank_mod_p(rows, index.size(), p) == base;
}

bool membership_by_degree(const GradedIdeal& I, const PolyFp& P, int e) {
  return membership_by_degree(reduce_linear(I), P, e);
}

}  // namespace dcreg::macaulay
