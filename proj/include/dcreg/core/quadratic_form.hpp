#pragma once

#include <vector>

#include "dcreg/core/linalg.hpp"
#include "dcreg/core/sparse_poly.hpp"

namespace dcreg {

template <class K>
class QuadraticForm {
 public:
  // P must be zero or homogeneous of degree 2
  static QuadraticForm from_poly(const SparsePoly<K>& P);

  int dim() const { return static_cast<int>(gram_.size()); }
  const Matrix<K>& gram() const { return gram_; }
  const RingPtr<K>& ring() const { return ring_; }
  SparsePoly<K> to_poly() const;

  // Q = sum_i coef[i] * form[i]^2 with linearly independent forms (row vectors)
  struct Diagonal {
    std::vector<K> coef;
    Matrix<K> forms;
  };
  Diagonal diagonalize() const;

 private:
  RingPtr<K> ring_;
  Matrix<K> gram_;
};

template <class K>
int quadratic_rank(const QuadraticForm<K>& Q) {
  return matrix_rank(Q.gram());
}

template <class K>
int quadratic_rank(const SparsePoly<K>& P) {
  return quadratic_rank(QuadraticForm<K>::from_poly(P));
}

extern template class QuadraticForm<Fp>;
extern template class QuadraticForm<Rational>;

}  // namespace dcreg
