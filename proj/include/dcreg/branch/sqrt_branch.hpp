#pragma once

#include <vector>

#include "dcreg/core/sparse_poly.hpp"

namespace dcreg::branch {

// i-th coefficient of the binomial series (1+t)^{1/2}, i >= 1
Rational gamma(int i);

// 1 + sum_{i<=j} Phi_i, from sum_k gamma_k (g-1)^k with every power truncated at degree j
template <class K>
SparsePoly<K> sqrt_truncation(const SparsePoly<K>& g, int j);

// degree j+1 component of g - [sqrt g]_j^2 (lower components are checked to vanish)
template <class K>
SparsePoly<K> h_component(const SparsePoly<K>& g, int j);

// All truncations up to j_max at once. Uses h_{k} = 2 Phi_{k}.
template <class K>
struct SqrtExpansion {
  SparsePoly<K> g;
  int j_max = 0;
  std::vector<SparsePoly<K>> phi;  // phi[0] = 1, phi[i] homogeneous of degree i

  SparsePoly<K> truncation(int j) const;
  // h_k = degree-k component of g - [sqrt g]_{k-1}^2, 2 <= k <= j_max
  SparsePoly<K> h(int k) const;
};

template <class K>
SqrtExpansion<K> expand_sqrt(const SparsePoly<K>& g, int j_max);

}  // namespace dcreg::branch
