#include "dcreg/core/substitution.hpp"

#include <stdexcept>
#include <unordered_map>

namespace dcreg {

template <class K>
LinearSubstitution<K>::LinearSubstitution(RingPtr<K> source, RingPtr<K> target, const Assignments& assignments)
    : source_(std::move(source)), target_(std::move(target)) {
  int n = source_->nvars();
  images_.resize(n);
  std::vector<bool> assigned(n, false);
  for (const auto& [name, img] : assignments) {
    int i = source_->index_of(name);
    if (i < 0) throw std::invalid_argument("substitution: unknown variable '" + name + "'");
    if (assigned[i]) throw std::invalid_argument("substitution: variable '" + name + "' assigned twice");
    if (img.degree() > 1) throw std::invalid_argument("substitution: image of '" + name + "' is not linear");
    assigned[i] = true;
    images_[i] = img.ring() ? rebase(img, target_) : Poly(target_);
  }
  for (int i = 0; i < n; ++i) {
    if (assigned[i]) continue;
    int j = target_->index_of(source_->name(i));
    if (j < 0) throw std::invalid_argument("substitution: variable '" + source_->name(i) + "' has no image");
    images_[i] = Poly::variable(target_, j);
  }
}

template <class K>
LinearSubstitution<K> LinearSubstitution<K>::eliminating(const RingPtr<K>& source, const Assignments& assignments) {
  std::vector<bool> gone(source->nvars(), false);
  for (const auto& [name, img] : assignments) {
    int i = source->index_of(name);
    if (i < 0) throw std::invalid_argument("substitution: unknown variable '" + name + "'");
    gone[i] = true;
  }
  for (const auto& [name, img] : assignments)
    for (const auto& t : img.terms())
      for (int v = 0; v < source->nvars(); ++v)
        if (t.mono[v] && gone[v])
          throw std::invalid_argument("substitution: image of '" + name + "' uses substituted variable " + source->name(v));
  std::vector<std::string> names;
  for (int i = 0; i < source->nvars(); ++i)
    if (!gone[i]) names.push_back(source->name(i));
  auto target = make_ring<K>(names, source->field());
  return LinearSubstitution(source, target, assignments);
}

template <class K>
LinearSubstitution<K> LinearSubstitution<K>::linear_change(const RingPtr<K>& ring, const Matrix<K>& A) {
  int n = ring->nvars();
  if (static_cast<int>(A.size()) != n) throw std::invalid_argument("linear_change: matrix size");
  Assignments as;
  for (int i = 0; i < n; ++i) {
    std::vector<typename Poly::Term> terms;
    for (int j = 0; j < n; ++j)
      if (!scalar_traits<K>::is_zero(A[i][j])) terms.push_back({Monomial::var(j), A[i][j]});
    as.emplace_back(ring->name(i), Poly::from_terms(ring, std::move(terms)));
  }
  return LinearSubstitution(ring, ring, as);
}

template <class K>
SparsePoly<K> LinearSubstitution<K>::apply(const Poly& P) const {
  if (!P.ring()->same_as(*source_)) throw std::invalid_argument("substitution: polynomial ring mismatch");
  int n = source_->nvars();
  std::vector<int> rename(n, -1);
  std::vector<bool> zero(n, false);
  for (int i = 0; i < n; ++i) {
    const Poly& img = images_[i];
    if (img.is_zero()) {
      zero[i] = true;
    } else if (img.size() == 1 && img.degree() == 1 && scalar_traits<K>::is_one(img.terms()[0].coef)) {
      rename[i] = img.terms()[0].mono.last_var();
    }
  }
  std::vector<std::vector<Poly>> powers(n);
  auto power = [&](int i, int e) -> const Poly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Poly::constant(target_, target_->field().one()));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images_[i]);
    return pw[e];
  };
  std::unordered_map<Monomial, K, MonomialHash> acc;
  for (const auto& t : P.terms()) {
    Monomial base;
    bool dead = false;
    for (int i = 0; i < n && !dead; ++i) {
      if (!t.mono[i]) continue;
      if (zero[i]) dead = true;
      else if (rename[i] >= 0) base.set(rename[i], base[rename[i]] + t.mono[i]);
    }
    if (dead) continue;
    Poly cur = Poly::monomial(target_, base, t.coef);
    for (int i = 0; i < n; ++i)
      if (t.mono[i] && rename[i] < 0) cur = cur * power(i, t.mono[i]);
    for (const auto& u : cur.terms()) {
      auto [it, fresh] = acc.try_emplace(u.mono, u.coef);
      if (!fresh) it->second = it->second + u.coef;
    }
  }
  std::vector<typename Poly::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!scalar_traits<K>::is_zero(c)) terms.push_back({m, c});
  return Poly::from_terms(target_, std::move(terms));
}

template <class K>
SparsePoly<K> translate(const SparsePoly<K>& P, const std::vector<K>& a) {
  if (static_cast<int>(a.size()) != P.nvars()) throw std::invalid_argument("translate: dimension mismatch");
  const auto& F = P.ring()->field();
  SparsePoly<K> cur = P;
  for (int i = 0; i < P.nvars(); ++i) {
    if (scalar_traits<K>::is_zero(a[i])) continue;
    int emax = 0;
    for (const auto& t : cur.terms()) emax = std::max(emax, t.mono[i]);
    std::vector<K> apow(emax + 1, F.one());
    for (int k = 1; k <= emax; ++k) apow[k] = apow[k - 1] * a[i];
    // Pascal rows in the field itself, valid in any characteristic
    std::vector<std::vector<K>> pascal(emax + 1);
    for (int e = 0; e <= emax; ++e) {
      pascal[e].assign(e + 1, F.one());
      for (int k = 1; k < e; ++k) pascal[e][k] = pascal[e - 1][k - 1] + pascal[e - 1][k];
    }
    std::vector<typename SparsePoly<K>::Term> out;
    for (const auto& t : cur.terms()) {
      int e = t.mono[i];
      for (int k = e; k >= 0; --k) {
        Monomial m = t.mono;
        m.set(i, k);
        out.push_back({m, t.coef * pascal[e][k] * apow[e - k]});
      }
    }
    cur = SparsePoly<K>::from_terms(P.ring(), std::move(out));
  }
  return cur;
}

template class LinearSubstitution<Fp>;
template class LinearSubstitution<Rational>;
template SparsePoly<Fp> translate(const SparsePoly<Fp>&, const std::vector<Fp>&);
template SparsePoly<Rational> translate(const SparsePoly<Rational>&, const std::vector<Rational>&);

}  // namespace dcreg
