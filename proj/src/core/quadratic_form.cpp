#include "dcreg/core/quadratic_form.hpp"

#include <stdexcept>

namespace dcreg {

template <class K>
QuadraticForm<K> QuadraticForm<K>::from_poly(const SparsePoly<K>& P) {
  const auto& F = P.ring()->field();
  if (F(2) == F.zero()) throw std::domain_error("quadratic forms need characteristic != 2");
  QuadraticForm Q;
  Q.ring_ = P.ring();
  int n = P.nvars();
  Q.gram_ = zero_matrix<K>(F, n, n);
  K half = inverse(F(2));
  for (const auto& t : P.terms()) {
    if (t.mono.degree() != 2) throw std::invalid_argument("quadratic form built from a polynomial with non-quadratic terms");
    int a = -1, b = -1;
    for (int i = 0; i < n; ++i) {
      if (t.mono[i] == 2) a = b = i;
      else if (t.mono[i] == 1) (a < 0 ? a : b) = i;
    }
    if (a == b) {
      Q.gram_[a][a] = t.coef;
    } else {
      Q.gram_[a][b] = t.coef * half;
      Q.gram_[b][a] = t.coef * half;
    }
  }
  return Q;
}

template <class K>
SparsePoly<K> QuadraticForm<K>::to_poly() const {
  const auto& F = ring_->field();
  std::vector<typename SparsePoly<K>::Term> terms;
  int n = dim();
  for (int i = 0; i < n; ++i) {
    terms.push_back({Monomial::var(i, 2), gram_[i][i]});
    for (int j = i + 1; j < n; ++j) terms.push_back({Monomial::var(i) * Monomial::var(j), gram_[i][j] * F(2)});
  }
  return SparsePoly<K>::from_terms(ring_, std::move(terms));
}

template <class K>
typename QuadraticForm<K>::Diagonal QuadraticForm<K>::diagonalize() const {
  const auto& F = ring_->field();
  int n = dim();
  Matrix<K> G = gram_;
  Diagonal out;
  while (true) {
    // pick v with Q(v) != 0: a nonzero diagonal entry, else e_i + e_j
    std::vector<K> v(n, F.zero());
    bool found = false;
    for (int i = 0; i < n && !found; ++i)
      if (!scalar_traits<K>::is_zero(G[i][i])) {
        v[i] = F.one();
        found = true;
      }
    for (int i = 0; i < n && !found; ++i)
      for (int j = i + 1; j < n && !found; ++j)
        if (!scalar_traits<K>::is_zero(G[i][j])) {
          v[i] = F.one();
          v[j] = F.one();
          found = true;
        }
    if (!found) break;
    std::vector<K> Gv(n, F.zero());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) Gv[i] = Gv[i] + G[i][j] * v[j];
    K qv = F.zero();
    for (int i = 0; i < n; ++i) qv = qv + v[i] * Gv[i];
    K inv = inverse(qv);
    std::vector<K> u(n);
    for (int i = 0; i < n; ++i) u[i] = Gv[i] * inv;
    // Q' = Q - qv * u^2
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) G[i][j] = G[i][j] - qv * u[i] * u[j];
    out.coef.push_back(qv);
    out.forms.push_back(std::move(u));
  }
  return out;
}

template class QuadraticForm<Fp>;
template class QuadraticForm<Rational>;

}  // namespace dcreg
