#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dcreg/core/monomial.hpp"
#include "dcreg/core/prime_field.hpp"
#include "dcreg/core/rational.hpp"

namespace dcreg {

template <class K>
class PolyRing {
 public:
  using Field = typename scalar_traits<K>::field_type;

  PolyRing(std::vector<std::string> names, Field field);

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;
  const Field& field() const { return field_; }

  bool same_as(const PolyRing& o) const { return this == &o || (names_ == o.names_ && field_ == o.field_); }

 private:
  std::vector<std::string> names_;
  Field field_;
};

template <class K>
using RingPtr = std::shared_ptr<const PolyRing<K>>;

template <class K>
RingPtr<K> make_ring(std::vector<std::string> names, typename PolyRing<K>::Field field) {
  return std::make_shared<const PolyRing<K>>(std::move(names), std::move(field));
}

// z1..zn, optionally followed by y
std::vector<std::string> standard_names(int n, bool with_y = false);

template <class K>
class SparsePoly {
 public:
  struct Term {
    Monomial mono;
    K coef;
  };

  SparsePoly() = default;
  explicit SparsePoly(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static SparsePoly constant(RingPtr<K> ring, const K& c);
  static SparsePoly variable(RingPtr<K> ring, int i);
  static SparsePoly monomial(RingPtr<K> ring, const Monomial& m, const K& c);
  // sorts, merges equal monomials and drops zeros
  static SparsePoly from_terms(RingPtr<K> ring, std::vector<Term> terms);

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  int nvars() const { return ring_->nvars(); }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  int min_degree() const { return terms_.empty() ? -1 : terms_.back().mono.degree(); }
  bool is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

  K coefficient(const Monomial& m) const;
  K constant_term() const;
  K zero_scalar() const { return ring_->field().zero(); }

  SparsePoly homogeneous_component(int d) const;
  SparsePoly truncated(int dmax) const;

  SparsePoly operator-() const;
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const SparsePoly& o);
  SparsePoly scaled(const K& c) const;
  SparsePoly times_monomial(const Monomial& m) const;
  SparsePoly pow(int e, int dmax = -1) const;

  K evaluate(const std::vector<K>& pt) const;
  SparsePoly derivative(int var) const;

  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return mul(a, b, -1); }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
    return true;
  }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

  // product with all terms of degree > dmax dropped; dmax < 0 means no bound
  static SparsePoly mul(const SparsePoly& a, const SparsePoly& b, int dmax);

 private:
  void check_ring(const SparsePoly& o) const;

  RingPtr<K> ring_;
  std::vector<Term> terms_;  // grevlex descending, no zero coefficients
};

using PolyFp = SparsePoly<Fp>;
using PolyQ = SparsePoly<Rational>;

template <class K>
SparsePoly<K> mul_truncated(const SparsePoly<K>& a, const SparsePoly<K>& b, int dmax) {
  return SparsePoly<K>::mul(a, b, dmax);
}

template <class K>
SparsePoly<K> homogeneous_component(const SparsePoly<K>& P, int d) {
  return P.homogeneous_component(d);
}

// q_1 + ... + q_j; f must vanish at the origin and 1 <= j <= deg f
template <class K>
SparsePoly<K> left_segment(const SparsePoly<K>& f, int j);

// same polynomial read in another ring with the same variable names
template <class K>
SparsePoly<K> rebase(const SparsePoly<K>& P, const RingPtr<K>& ring);

// coefficientwise reduction of a rational polynomial into F_p
PolyFp reduce_mod(const PolyQ& P, const RingPtr<Fp>& ring);

extern template class PolyRing<Fp>;
extern template class PolyRing<Rational>;
extern template class SparsePoly<Fp>;
extern template class SparsePoly<Rational>;

}  // namespace dcreg
