#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dcreg/core/linalg.hpp"
#include "dcreg/core/sparse_poly.hpp"

namespace dcreg {

// Ring map sending each assigned variable to a linear (or affine) form in the
// target ring; unassigned variables go to the target variable of the same name.
template <class K>
class LinearSubstitution {
 public:
  using Poly = SparsePoly<K>;
  using Assignments = std::vector<std::pair<std::string, Poly>>;

  LinearSubstitution(RingPtr<K> source, RingPtr<K> target, const Assignments& assignments);

  // Target ring is the source ring minus the assigned variables; images are
  // written in the source ring and must not involve assigned variables.
  static LinearSubstitution eliminating(const RingPtr<K>& source, const Assignments& assignments);

  // z -> A z on a single ring: z_i maps to sum_j A[i][j] z_j
  static LinearSubstitution linear_change(const RingPtr<K>& ring, const Matrix<K>& A);

  const RingPtr<K>& source() const { return source_; }
  const RingPtr<K>& target() const { return target_; }
  const Poly& image(int i) const { return images_.at(i); }

  Poly apply(const Poly& P) const;

 private:
  RingPtr<K> source_, target_;
  std::vector<Poly> images_;
};

template <class K>
SparsePoly<K> restrict(const SparsePoly<K>& P, const LinearSubstitution<K>& S) {
  return S.apply(P);
}

// P(z + a)
template <class K>
SparsePoly<K> translate(const SparsePoly<K>& P, const std::vector<K>& a);

extern template class LinearSubstitution<Fp>;
extern template class LinearSubstitution<Rational>;

}  // namespace dcreg
