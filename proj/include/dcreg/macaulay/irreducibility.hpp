#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcreg/macaulay/hilbert.hpp"

namespace dcreg::macaulay {

// Sufficient test for irreducibility (and reducedness) of the projective
// zero set of a homogeneous ideal over the algebraic closure:
//  - a linear space is irreducible;
//  - a single quadric of rank >= 3 is irreducible;
//  - a smooth complete intersection of positive dimension is connected,
//    hence irreducible.
struct IrreducibilityCertificate {
  bool certified = false;
  std::string method;   // "linear", "quadric-rank", "smooth-ci"
  std::string reason;   // why certification failed
  int ambient = 0;      // variables left after eliminating linear generators
  int codim = 0;
  int projective_dim = 0;
  int quadric_rank = -1;
  int jacobian_zero_degree = -1;  // degree where the singular-locus ideal fills everything
  SequenceCertificate ci;
  bool has_ci = false;
};

IrreducibilityCertificate certify_irreducible(const GradedIdeal& I, int d_cap = 12);

// Randomized probe: restrict to random 3-dimensional subspaces and record
// the dimension of the saturated linear part of the restricted ideal.
struct ComponentProbe {
  std::vector<int> linear_dims;
  bool linear_structure_seen = false;  // every probe saw a nonzero linear part
};
ComponentProbe component_probe(const GradedIdeal& I, uint64_t seed, int samples = 5);

// all c x c minors of the Jacobian matrix of gens
std::vector<PolyFp> jacobian_minors(const std::vector<PolyFp>& gens);

}  // namespace dcreg::macaulay
