#include "dcreg/regularity/sampling.hpp"

#include <stdexcept>

#include "dcreg/core/linalg.hpp"
#include "dcreg/core/substitution.hpp"
#include "dcreg/core/univariate.hpp"

namespace dcreg::regularity {

uint64_t splitmix(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b) { return splitmix(splitmix(splitmix(seed) ^ a) ^ b); }

uint64_t Rng::below(uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  uint64_t limit = ~uint64_t(0) - (~uint64_t(0) % n);
  for (;;) {
    uint64_t x = eng_();
    if (x < limit) return x % n;
  }
}

Point random_point(const PrimeField& F, int n, Rng& rng) {
  Point pt(n);
  for (auto& x : pt) x = static_cast<uint32_t>(rng.below(F.modulus()));
  return pt;
}

PolyFp random_linear_form(const RingPtr<Fp>& ring, Rng& rng, bool nonzero) {
  const auto& F = ring->field();
  for (;;) {
    PolyFp L(ring);
    for (int i = 0; i < ring->nvars(); ++i) L += PolyFp::monomial(ring, Monomial::var(i), rng.element(F));
    if (!nonzero || !L.is_zero()) return L;
  }
}

namespace {

Fp monomial_value(const Monomial& mono, const std::vector<Fp>& a, const PrimeField& F) {
  Fp v = F.one();
  for (size_t i = 0; i < a.size(); ++i)
    for (int e = 0; e < mono[static_cast<int>(i)]; ++e) v *= a[i];
  return v;
}

// Dense random polynomial of degree <= d (top component nonzero), with the
// rows of (A c = b) imposed by correcting pivot coefficients.
PolyFp constrained_random(const RingPtr<Fp>& ring, int d, Rng& rng, const std::vector<std::vector<Fp>>& pts,
                          const std::vector<Fp>& targets) {
  const auto& F = ring->field();
  std::vector<Monomial> monos;
  for (int k = d; k >= 0; --k)
    for (const auto& mono : monomials_of_degree(ring->nvars(), k)) monos.push_back(mono);
  std::vector<Fp> c(monos.size());
  for (auto& x : c) x = rng.element(F);
  if (!pts.empty()) {
    // augmented system A delta = b - A c
    size_t k = pts.size(), N = monos.size();
    Matrix<Fp> A = zero_matrix<Fp>(F, k, N + 1);
    for (size_t r = 0; r < k; ++r) {
      Fp val = F.zero();
      for (size_t j = 0; j < N; ++j) {
        A[r][j] = monomial_value(monos[j], pts[r], F);
        val += A[r][j] * c[j];
      }
      A[r][N] = targets[r] - val;
    }
    auto piv = rref(A);
    for (size_t r = 0; r < piv.size(); ++r) {
      if (piv[r] == static_cast<int>(N)) throw std::invalid_argument("infeasible point constraints");
      c[piv[r]] += A[r][N];
    }
  }
  std::vector<PolyFp::Term> terms;
  for (size_t j = 0; j < monos.size(); ++j) terms.push_back({monos[j], c[j]});
  return PolyFp::from_terms(ring, std::move(terms));
}

}  // namespace

DoubleCoverInstance random_instance(int M, int m, int l, uint64_t p, bool toy, uint64_t seed,
                                    const std::vector<PointConstraint>& constraints) {
  validate_parameters(M, m, l, p, toy);
  auto ring = make_ring<Fp>(standard_names(M + 1), PrimeField(p));
  const auto& F = ring->field();
  std::vector<std::vector<Fp>> fp, gp;
  std::vector<Fp> ft, gt;
  for (const auto& c : constraints) {
    if (static_cast<int>(c.point.size()) != M + 1) throw std::invalid_argument("constraint point has wrong dimension");
    std::vector<Fp> a;
    for (uint32_t v : c.point) a.push_back(F.from_u64(v));
    fp.push_back(a);
    ft.push_back(F.zero());
    if (c.kind == PointConstraint::Kind::OnBranch) {
      gp.push_back(a);
      gt.push_back(F.zero());
    } else if (c.kind == PointConstraint::Kind::OffBranchUnit) {
      gp.push_back(a);
      gt.push_back(F.one());
    }
  }
  Rng rng(derive_seed(seed, 0x696e7374));
  PolyFp f = constrained_random(ring, m, rng, fp, ft);
  PolyFp g = constrained_random(ring, 2 * l, rng, gp, gt);
  if (f.degree() != m || g.degree() != 2 * l) throw std::runtime_error("degenerate random instance; try another seed");
  return make_instance(M, m, l, p, toy, std::move(f), std::move(g));
}

std::vector<Point> points_on_Q(const DoubleCoverInstance& inst, int count, uint64_t seed) {
  const auto& F = inst.field();
  const int n = inst.nvars();
  auto line_ring = make_ring<Fp>({"t"}, F);
  PolyFp t = PolyFp::variable(line_ring, 0);
  std::vector<Point> out;
  for (int k = 0; k < count; ++k) {
    Rng rng(derive_seed(seed, 0x706f696e74, k));
    bool found = false;
    for (int attempt = 0; attempt < 1000 && !found; ++attempt) {
      Point a = random_point(F, n, rng), b = random_point(F, n, rng);
      LinearSubstitution<Fp>::Assignments as;
      for (int i = 0; i < n; ++i)
        as.emplace_back(inst.ring->name(i), PolyFp::constant(line_ring, F.from_u64(a[i])) + t.scaled(F.from_u64(b[i])));
      PolyFp u = LinearSubstitution<Fp>(inst.ring, line_ring, as).apply(inst.f);
      if (u.degree() < 1) continue;
      univariate::UPoly up(u.degree() + 1, F.zero());
      for (const auto& term : u.terms()) up[term.mono.degree()] = term.coef;
      auto rs = univariate::roots(up, F, [&rng, &F] { return static_cast<uint32_t>(rng.below(F.modulus())); });
      if (rs.empty()) continue;
      Fp r = F.from_u64(rs[rng.below(rs.size())]);
      Point pt(n);
      for (int i = 0; i < n; ++i) pt[i] = (F.from_u64(a[i]) + r * F.from_u64(b[i])).v;
      out.push_back(std::move(pt));
      found = true;
    }
    if (!found) throw std::runtime_error("no point on Q found within the retry budget");
  }
  return out;
}

}  // namespace dcreg::regularity
