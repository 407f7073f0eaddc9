#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "dcreg/core/prime_field.hpp"

namespace dcreg::univariate {

using UPoly = std::vector<Fp>;  // coefficients, low degree first; empty is zero

void trim(UPoly& a);
int degree(const UPoly& a);
UPoly mul(const UPoly& a, const UPoly& b);
UPoly mod(UPoly a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);
UPoly derivative(const UPoly& a);
// x^e mod h
UPoly powmod_x(uint64_t e, const UPoly& h, const PrimeField& F);

// Distinct roots in F_p, sorted. `next` supplies random field elements for
// the equal-degree splitting.
std::vector<uint32_t> roots(UPoly a, const PrimeField& F, const std::function<uint32_t()>& next);

}  // namespace dcreg::univariate
