#include "dcreg/macaulay/graded_ideal.hpp"

#include <stdexcept>

namespace dcreg::macaulay {

GradedIdeal::GradedIdeal(RingPtr<Fp> ring, std::vector<PolyFp> generators) : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (g.is_zero()) throw std::invalid_argument("GradedIdeal: zero generator");
    if (!g.is_homogeneous()) throw std::invalid_argument("GradedIdeal: generator is not homogeneous");
    if (!g.ring()->same_as(*ring_)) throw std::invalid_argument("GradedIdeal: generator in a different ring");
  }
}

std::vector<int> GradedIdeal::degrees() const {
  std::vector<int> d;
  for (const auto& g : gens_) d.push_back(g.degree());
  return d;
}

GradedIdeal GradedIdeal::with(const PolyFp& extra) const {
  auto gens = gens_;
  gens.push_back(extra);
  return GradedIdeal(ring_, std::move(gens));
}

LinearReduction reduce_linear(const GradedIdeal& I) { return reduce_linear(I.ring(), I.generators()); }

LinearReduction reduce_linear(const RingPtr<Fp>& ring, const std::vector<PolyFp>& gens) {
  const PrimeField& F = ring->field();
  int n = ring->nvars();
  LinearReduction out;
  Matrix<Fp> lin;
  for (const auto& g : gens) {
    if (g.degree() != 1) continue;
    std::vector<Fp> row(n, F.zero());
    for (const auto& t : g.terms()) row[t.mono.last_var()] = t.coef;
    lin.push_back(std::move(row));
  }
  std::vector<int> piv = lin.empty() ? std::vector<int>{} : rref(lin);
  lin.resize(piv.size());
  out.linear_basis = lin;
  out.eliminated = piv;
  LinearSubstitution<Fp>::Assignments as;
  for (size_t r = 0; r < piv.size(); ++r) {
    std::vector<PolyFp::Term> terms;
    for (int j = 0; j < n; ++j)
      if (j != piv[r] && !lin[r][j].is_zero()) terms.push_back({Monomial::var(j), -lin[r][j]});
    as.emplace_back(ring->name(piv[r]), PolyFp::from_terms(ring, std::move(terms)));
  }
  out.subst = std::make_shared<const LinearSubstitution<Fp>>(LinearSubstitution<Fp>::eliminating(ring, as));
  out.ring = out.subst->target();
  for (const auto& g : gens) {
    if (g.degree() <= 1) continue;
    PolyFp r = out.subst->apply(g);
    if (!r.is_zero()) out.generators.push_back(std::move(r));
  }
  return out;
}

MonomialIndex::MonomialIndex(int nvars, int degree) : monos_(monomials_of_degree(nvars, degree)) {
  size_t cap = 16;
  while (cap < 2 * monos_.size() + 1) cap <<= 1;
  mask_ = cap - 1;
  table_.assign(cap, {Monomial(), UINT32_MAX});
  for (uint32_t i = 0; i < monos_.size(); ++i) {
    size_t h = monos_[i].hash() & mask_;
    while (table_[h].second != UINT32_MAX) h = (h + 1) & mask_;
    table_[h] = {monos_[i], i};
  }
}

uint32_t MonomialIndex::at(const Monomial& m) const {
  size_t h = m.hash() & mask_;
  while (true) {
    const auto& e = table_[h];
    if (e.second == UINT32_MAX) throw std::out_of_range("MonomialIndex: monomial not present");
    if (e.first == m) return e.second;
    h = (h + 1) & mask_;
  }
}

SparseRow row_of(const PolyFp& P, const MonomialIndex& index) {
  SparseRow row;
  row.cols.reserve(P.size());
  row.vals.reserve(P.size());
  for (const auto& t : P.terms()) {
    row.cols.push_back(index.at(t.mono));
    row.vals.push_back(t.coef.v);
  }
  return row;
}

std::vector<SparseRow> macaulay_rows(const std::vector<PolyFp>& gens, int nvars, const MonomialIndex& index, int d) {
  std::vector<SparseRow> rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int e = d - g.degree();
    if (e < 0) continue;
    for (const Monomial& m : monomials_of_degree(nvars, e)) {
      SparseRow row;
      row.cols.reserve(g.size());
      row.vals.reserve(g.size());
      for (const auto& t : g.terms()) {
        row.cols.push_back(index.at(t.mono * m));
        row.vals.push_back(t.coef.v);
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace dcreg::macaulay
