#include "dcreg/macaulay/irreducibility.hpp"

#include <random>

#include "dcreg/core/quadratic_form.hpp"
#include "dcreg/macaulay/saturation.hpp"

namespace dcreg::macaulay {

namespace {

PolyFp det_poly(const std::vector<std::vector<PolyFp>>& m, const RingPtr<Fp>& ring) {
  size_t n = m.size();
  if (n == 0) return PolyFp::constant(ring, ring->field().one());
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  PolyFp acc(ring);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<PolyFp>> sub;
    for (size_t i = 1; i < n; ++i) {
      std::vector<PolyFp> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(std::move(row));
    }
    PolyFp term = m[0][j] * det_poly(sub, ring);
    if (j % 2) acc -= term;
    else acc += term;
  }
  return acc;
}

void choose(int n, int c, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == c) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, c, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<PolyFp> jacobian_minors(const std::vector<PolyFp>& gens) {
  std::vector<PolyFp> out;
  if (gens.empty()) return out;
  const auto& ring = gens.front().ring();
  int n = ring->nvars(), c = static_cast<int>(gens.size());
  std::vector<std::vector<PolyFp>> J(c);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < n; ++j) J[i].push_back(gens[i].derivative(j));
  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  choose(n, c, 0, cur, subsets);
  for (const auto& cols : subsets) {
    std::vector<std::vector<PolyFp>> m(c);
    for (int i = 0; i < c; ++i)
      for (int j : cols) m[i].push_back(J[i][j]);
    PolyFp d = det_poly(m, ring);
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return out;
}

IrreducibilityCertificate certify_irreducible(const GradedIdeal& I, int d_cap) {
  IrreducibilityCertificate cert;
  LinearReduction red = reduce_linear(I);
  int n = red.ring->nvars();
  int c = static_cast<int>(red.generators.size());
  cert.ambient = n;
  cert.codim = c;
  cert.projective_dim = n - 1 - c;
  if (c == 0) {
    if (n == 0) {
      cert.reason = "empty zero set";
      return cert;
    }
    cert.certified = true;
    cert.method = "linear";
    return cert;
  }
  if (c == 1 && red.generators[0].degree() == 2) {
    cert.quadric_rank = quadratic_rank(red.generators[0]);
    cert.certified = cert.quadric_rank >= 3;
    cert.method = "quadric-rank";
    if (!cert.certified) cert.reason = "quadric of rank " + std::to_string(cert.quadric_rank);
    return cert;
  }
  if (cert.projective_dim < 1) {
    cert.reason = "expected projective dimension below 1";
    return cert;
  }
  cert.ci = regular_sequence_certificate(red.generators, d_cap);
  cert.has_ci = true;
  if (cert.ci.verdict != SequenceVerdict::Regular) {
    cert.reason = "not certified as a complete intersection: " + cert.ci.verdict_string();
    return cert;
  }
  std::vector<PolyFp> J = red.generators;
  for (auto& m : jacobian_minors(red.generators)) J.push_back(std::move(m));
  LinearReduction jred = reduce_linear(GradedIdeal(red.ring, J));
  int jn = jred.ring->nvars();
  for (int d = 0; d <= d_cap; ++d) {
    MonomialIndex index(jn, d);
    if (index.size() == 0) {
      cert.jacobian_zero_degree = d;
      break;
    }
    auto rows = macaulay_rows(jred.generators, jn, index, d);
    if (rank_mod_p(rows, index.size(), red.ring->field().modulus()) == index.size()) {
      cert.jacobian_zero_degree = d;
      break;
    }
  }
  if (cert.jacobian_zero_degree < 0) {
    cert.reason = "singular locus not shown empty through degree " + std::to_string(d_cap);
    return cert;
  }
  cert.certified = true;
  cert.method = "smooth-ci";
  return cert;
}

ComponentProbe component_probe(const GradedIdeal& I, uint64_t seed, int samples) {
  ComponentProbe probe;
  LinearReduction red = reduce_linear(I);
  int n = red.ring->nvars();
  if (n < 3 || red.generators.empty()) return probe;
  const PrimeField& F = red.ring->field();
  std::mt19937_64 rng(seed);
  auto small = make_ring<Fp>(standard_names(3), F);
  bool all = true;
  for (int s = 0; s < samples; ++s) {
    LinearSubstitution<Fp>::Assignments as;
    for (int i = 0; i < n; ++i) {
      std::vector<Fp> coeffs(3);
      for (auto& x : coeffs) x = F.from_u64(rng());
      as.emplace_back(red.ring->name(i), linear_form(small, coeffs));
    }
    LinearSubstitution<Fp> S(red.ring, small, as);
    std::vector<PolyFp> gens;
    for (const auto& g : red.generators) {
      PolyFp r = S.apply(g);
      if (!r.is_zero()) gens.push_back(std::move(r));
    }
    auto L = saturated_linear_forms(GradedIdeal(small, gens), 3);
    probe.linear_dims.push_back(static_cast<int>(L.basis.size()));
    if (L.basis.empty()) all = false;
  }
  probe.linear_structure_seen = all;
  return probe;
}

}  // namespace dcreg::macaulay
