#pragma once

#include <memory>
#include <vector>

#include "dcreg/core/substitution.hpp"
#include "dcreg/macaulay/rank.hpp"

namespace dcreg::macaulay {

class GradedIdeal {
 public:
  // generators must be nonzero, homogeneous and share the ring
  GradedIdeal(RingPtr<Fp> ring, std::vector<PolyFp> generators);

  const RingPtr<Fp>& ring() const { return ring_; }
  int nvars() const { return ring_->nvars(); }
  uint32_t modulus() const { return ring_->field().modulus(); }
  const std::vector<PolyFp>& generators() const { return gens_; }
  std::vector<int> degrees() const;

  GradedIdeal with(const PolyFp& extra) const;

 private:
  RingPtr<Fp> ring_;
  std::vector<PolyFp> gens_;
};

// Generators of degree 1 eliminated by substitution. R/I and R'/I' are
// isomorphic as graded rings, so Hilbert functions agree exactly.
struct LinearReduction {
  RingPtr<Fp> ring;                                     // remaining variables
  std::vector<PolyFp> generators;                        // nonzero images of the other generators
  Matrix<Fp> linear_basis;                               // rref of the linear generators, original coordinates
  std::vector<int> eliminated;                           // pivot variables of linear_basis
  std::shared_ptr<const LinearSubstitution<Fp>> subst;  // original ring -> ring

  PolyFp reduce(const PolyFp& P) const { return subst->apply(P); }
};

LinearReduction reduce_linear(const GradedIdeal& I);
LinearReduction reduce_linear(const RingPtr<Fp>& ring, const std::vector<PolyFp>& gens);

// Monomials of one degree with their column positions (grevlex descending).
class MonomialIndex {
 public:
  MonomialIndex(int nvars, int degree);
  size_t size() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  uint32_t at(const Monomial& m) const;

 private:
  std::vector<Monomial> monos_;
  std::vector<std::pair<Monomial, uint32_t>> table_;
  size_t mask_ = 0;
};

// rows m * g for every generator g of degree <= d and monomial m of degree d - deg g
std::vector<SparseRow> macaulay_rows(const std::vector<PolyFp>& gens, int nvars, const MonomialIndex& index, int d);
SparseRow row_of(const PolyFp& P, const MonomialIndex& index);

}  // namespace dcreg::macaulay
