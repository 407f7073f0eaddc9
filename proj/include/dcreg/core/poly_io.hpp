#pragma once

#include <string>
#include <string_view>

#include "dcreg/core/sparse_poly.hpp"

namespace dcreg {

// Terms like "3*z1^2*z2", "-z3", "5/7*y"; coefficients may be integers or
// num/den. Over F_p they are reduced modulo p.
template <class K>
SparsePoly<K> parse_poly(const RingPtr<K>& ring, std::string_view text);

// Canonical text: terms in grevlex descending order, F_p coefficients as
// symmetric representatives, unit coefficients omitted.
template <class K>
std::string to_string(const SparsePoly<K>& P);

}  // namespace dcreg
