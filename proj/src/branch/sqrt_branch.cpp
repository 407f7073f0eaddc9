#include "dcreg/branch/sqrt_branch.hpp"

#include <stdexcept>

namespace dcreg::branch {

Rational gamma(int i) {
  if (i < 1) throw std::invalid_argument("gamma: index must be positive");
  // (-1)^{i-1} (2i-3)!! / (2^i i!), with (-1)!! = 1
  BigInt dfact = 1;
  for (int k = 2 * i - 3; k > 1; k -= 2) dfact *= k;
  BigInt den = factorial(i) << i;
  Rational r(dfact, den);
  return (i % 2 == 1) ? r : Rational(-r);
}

namespace {

template <class K>
void check_unit(const SparsePoly<K>& g) {
  if (!scalar_traits<K>::is_one(g.constant_term()))
    throw std::invalid_argument("square-root machinery needs constant term 1");
  const auto& F = g.ring()->field();
  if (scalar_traits<K>::is_zero(F(2))) throw std::domain_error("characteristic 2");
}

}  // namespace

template <class K>
SparsePoly<K> sqrt_truncation(const SparsePoly<K>& g, int j) {
  check_unit(g);
  if (j < 0) throw std::invalid_argument("sqrt_truncation: negative degree");
  const auto& F = g.ring()->field();
  SparsePoly<K> one = SparsePoly<K>::constant(g.ring(), F.one());
  SparsePoly<K> w = (g - one).truncated(j);
  SparsePoly<K> result = one;
  SparsePoly<K> wk = one;
  for (int k = 1; k <= j; ++k) {
    wk = mul_truncated(wk, w, j);
    if (wk.is_zero()) break;
    result += wk.scaled(convert(gamma(k), F));
  }
  return result;
}

template <class K>
SparsePoly<K> h_component(const SparsePoly<K>& g, int j) {
  SparsePoly<K> s = sqrt_truncation(g, j);
  SparsePoly<K> r = g.truncated(j + 1) - mul_truncated(s, s, j + 1);
  if (r.min_degree() >= 0 && r.min_degree() <= j)
    throw std::logic_error("h_component: residual has a component of degree <= j");
  return r.homogeneous_component(j + 1);
}

template <class K>
SparsePoly<K> SqrtExpansion<K>::truncation(int j) const {
  if (j > j_max) throw std::out_of_range("SqrtExpansion: truncation beyond j_max");
  SparsePoly<K> s(g.ring());
  for (int i = 0; i <= j; ++i) s += phi[i];
  return s;
}

template <class K>
SparsePoly<K> SqrtExpansion<K>::h(int k) const {
  if (k < 2 || k > j_max) throw std::out_of_range("SqrtExpansion: h index");
  return phi[k].scaled(g.ring()->field()(2));
}

template <class K>
SqrtExpansion<K> expand_sqrt(const SparsePoly<K>& g, int j_max) {
  SqrtExpansion<K> e;
  e.g = g;
  e.j_max = j_max;
  SparsePoly<K> s = sqrt_truncation(g, j_max);
  for (int i = 0; i <= j_max; ++i) e.phi.push_back(s.homogeneous_component(i));
  return e;
}

template SparsePoly<Fp> sqrt_truncation(const SparsePoly<Fp>&, int);
template SparsePoly<Rational> sqrt_truncation(const SparsePoly<Rational>&, int);
template SparsePoly<Fp> h_component(const SparsePoly<Fp>&, int);
template SparsePoly<Rational> h_component(const SparsePoly<Rational>&, int);
template struct SqrtExpansion<Fp>;
template struct SqrtExpansion<Rational>;
template SqrtExpansion<Fp> expand_sqrt(const SparsePoly<Fp>&, int);
template SqrtExpansion<Rational> expand_sqrt(const SparsePoly<Rational>&, int);

}  // namespace dcreg::branch
