#pragma once

#include <vector>

#include "dcreg/macaulay/graded_ideal.hpp"

namespace dcreg::macaulay {

struct SaturatedLinearPart {
  Matrix<Fp> basis;  // rows: coefficient vectors in the ideal's variables, rref
  int level = 0;     // e with L_e = L_{e+1}, or e_max when not stabilized
  bool stabilized = false;
  std::vector<int> dims;  // dim L_e for e = 0..e_max
};

// L_e = { linear l : l * (all monomials of degree e) lies in I_{e+1} }
SaturatedLinearPart saturated_linear_forms(const GradedIdeal& I, int e_max = 4);

// P * (all monomials of degree e) inside I_{d+e}
bool membership_by_degree(const GradedIdeal& I, const PolyFp& P, int e);
bool membership_by_degree(const LinearReduction& red, const PolyFp& P, int e);

PolyFp linear_form(const RingPtr<Fp>& ring, const std::vector<Fp>& coeffs);

}  // namespace dcreg::macaulay
