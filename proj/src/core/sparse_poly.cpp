#include "dcreg/core/sparse_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcreg {

template <class K>
PolyRing<K>::PolyRing(std::vector<std::string> names, Field field) : names_(std::move(names)), field_(std::move(field)) {
  if (static_cast<int>(names_.size()) > kMaxVars) throw std::invalid_argument("too many variables");
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable name " + names_[i]);
}

template <class K>
int PolyRing<K>::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> standard_names(int n, bool with_y) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back("z" + std::to_string(i));
  if (with_y) v.push_back("y");
  return v;
}

template <class K>
void SparsePoly<K>::check_ring(const SparsePoly& o) const {
  if (!ring_ || !o.ring_) throw std::logic_error("polynomial without ring");
  if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw std::invalid_argument("polynomials live in different rings");
}

template <class K>
SparsePoly<K> SparsePoly<K>::constant(RingPtr<K> ring, const K& c) {
  SparsePoly r(std::move(ring));
  if (!scalar_traits<K>::is_zero(c)) r.terms_.push_back({Monomial(), c});
  return r;
}

template <class K>
SparsePoly<K> SparsePoly<K>::variable(RingPtr<K> ring, int i) {
  if (i < 0 || i >= ring->nvars()) throw std::out_of_range("variable index");
  K one = ring->field().one();
  SparsePoly r(std::move(ring));
  r.terms_.push_back({Monomial::var(i), one});
  return r;
}

template <class K>
SparsePoly<K> SparsePoly<K>::monomial(RingPtr<K> ring, const Monomial& m, const K& c) {
  SparsePoly r(std::move(ring));
  if (m.last_var() >= r.ring_->nvars()) throw std::out_of_range("monomial outside ring");
  if (!scalar_traits<K>::is_zero(c)) r.terms_.push_back({m, c});
  return r;
}

template <class K>
SparsePoly<K> SparsePoly<K>::from_terms(RingPtr<K> ring, std::vector<Term> terms) {
  SparsePoly r(std::move(ring));
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return grevlex_cmp(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coef += t.coef;
    } else {
      if (!r.terms_.empty() && scalar_traits<K>::is_zero(r.terms_.back().coef)) r.terms_.pop_back();
      r.terms_.push_back(std::move(t));
    }
  }
  if (!r.terms_.empty() && scalar_traits<K>::is_zero(r.terms_.back().coef)) r.terms_.pop_back();
  return r;
}

template <class K>
K SparsePoly<K>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex_cmp(t.mono, x) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return zero_scalar();
}

template <class K>
K SparsePoly<K>::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.degree() == 0) return terms_.back().coef;
  return zero_scalar();
}

template <class K>
SparsePoly<K> SparsePoly<K>::homogeneous_component(int d) const {
  if (d < 0) throw std::invalid_argument("negative degree");
  SparsePoly r(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) r.terms_.push_back(t);
  return r;
}

template <class K>
SparsePoly<K> SparsePoly<K>::truncated(int dmax) const {
  SparsePoly r(ring_);
  for (const auto& t : terms_)
    if (t.mono.degree() <= dmax) r.terms_.push_back(t);
  return r;
}

template <class K>
SparsePoly<K> SparsePoly<K>::operator-() const {
  SparsePoly r(*this);
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

template <class K>
SparsePoly<K>& SparsePoly<K>::operator+=(const SparsePoly& o) {
  check_ring(o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int c = i == terms_.size() ? -1 : j == o.terms_.size() ? 1 : grevlex_cmp(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      K s = terms_[i].coef + o.terms_[j].coef;
      if (!scalar_traits<K>::is_zero(s)) out.push_back({terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

template <class K>
SparsePoly<K>& SparsePoly<K>::operator-=(const SparsePoly& o) {
  return *this += -o;
}

template <class K>
SparsePoly<K>& SparsePoly<K>::operator*=(const SparsePoly& o) {
  return *this = mul(*this, o, -1);
}

template <class K>
SparsePoly<K> SparsePoly<K>::scaled(const K& c) const {
  SparsePoly r(ring_);
  if (scalar_traits<K>::is_zero(c)) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = t.coef * c;
  return r;
}

template <class K>
SparsePoly<K> SparsePoly<K>::times_monomial(const Monomial& m) const {
  SparsePoly r(*this);
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;  // multiplication by a monomial preserves grevlex order
}

template <class K>
SparsePoly<K> SparsePoly<K>::mul(const SparsePoly& a, const SparsePoly& b, int dmax) {
  a.check_ring(b);
  SparsePoly r(a.ring_);
  if (a.is_zero() || b.is_zero()) return r;
  const SparsePoly& x = a.size() <= b.size() ? a : b;
  const SparsePoly& y = a.size() <= b.size() ? b : a;
  std::vector<Term> prod;
  for (const auto& s : x.terms_) {
    auto start = y.terms_.begin();
    if (dmax >= 0) {
      int room = dmax - s.mono.degree();
      if (room < 0) continue;
      // terms are sorted by descending degree
      start = std::partition_point(y.terms_.begin(), y.terms_.end(),
                                   [room](const Term& t) { return t.mono.degree() > room; });
    }
    for (auto it = start; it != y.terms_.end(); ++it) prod.push_back({s.mono * it->mono, s.coef * it->coef});
  }
  return from_terms(a.ring_, std::move(prod));
}

template <class K>
SparsePoly<K> SparsePoly<K>::pow(int e, int dmax) const {
  if (e < 0) throw std::invalid_argument("negative exponent");
  SparsePoly r = constant(ring_, ring_->field().one());
  SparsePoly b = *this;
  while (e) {
    if (e & 1) r = mul(r, b, dmax);
    e >>= 1;
    if (e) b = mul(b, b, dmax);
  }
  return r;
}

template <class K>
K SparsePoly<K>::evaluate(const std::vector<K>& pt) const {
  if (static_cast<int>(pt.size()) != nvars()) throw std::invalid_argument("point dimension mismatch");
  K acc = zero_scalar();
  for (const auto& t : terms_) {
    K v = t.coef;
    for (int i = 0; i < nvars(); ++i)
      for (int e = 0; e < t.mono[i]; ++e) v = v * pt[i];
    acc = acc + v;
  }
  return acc;
}

template <class K>
SparsePoly<K> SparsePoly<K>::derivative(int var) const {
  std::vector<Term> out;
  const auto& F = ring_->field();
  for (const auto& t : terms_) {
    int e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coef * F(e)});
  }
  return from_terms(ring_, std::move(out));
}

template <class K>
SparsePoly<K> left_segment(const SparsePoly<K>& f, int j) {
  int d = f.degree();
  if (!scalar_traits<K>::is_zero(f.constant_term())) throw std::invalid_argument("left_segment: f must vanish at the origin");
  if (j < 1 || j > d) throw std::invalid_argument("left_segment: need 1 <= j <= deg f");
  return f.truncated(j);
}

template <class K>
SparsePoly<K> rebase(const SparsePoly<K>& P, const RingPtr<K>& ring) {
  std::vector<typename SparsePoly<K>::Term> terms;
  std::vector<int> map(P.nvars(), -1);
  for (int i = 0; i < P.nvars(); ++i) map[i] = ring->index_of(P.ring()->name(i));
  for (const auto& t : P.terms()) {
    Monomial m;
    for (int i = 0; i < P.nvars(); ++i) {
      if (!t.mono[i]) continue;
      if (map[i] < 0) throw std::invalid_argument("variable " + P.ring()->name(i) + " missing in target ring");
      m.set(map[i], t.mono[i]);
    }
    terms.push_back({m, t.coef});
  }
  return SparsePoly<K>::from_terms(ring, std::move(terms));
}

PolyFp reduce_mod(const PolyQ& P, const RingPtr<Fp>& ring) {
  std::vector<PolyFp::Term> terms;
  for (const auto& t : P.terms()) terms.push_back({t.mono, reduce(t.coef, ring->field())});
  return rebase(PolyFp::from_terms(std::make_shared<const PolyRing<Fp>>(P.ring()->names(), ring->field()), std::move(terms)), ring);
}

template class PolyRing<Fp>;
template class PolyRing<Rational>;
template class SparsePoly<Fp>;
template class SparsePoly<Rational>;
template SparsePoly<Fp> left_segment(const SparsePoly<Fp>&, int);
template SparsePoly<Rational> left_segment(const SparsePoly<Rational>&, int);
template SparsePoly<Fp> rebase(const SparsePoly<Fp>&, const RingPtr<Fp>&);
template SparsePoly<Rational> rebase(const SparsePoly<Rational>&, const RingPtr<Rational>&);

}  // namespace dcreg
