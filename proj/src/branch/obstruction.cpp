#include "dcreg/branch/obstruction.hpp"

#include <stdexcept>

#include "dcreg/core/quadratic_form.hpp"
#include "dcreg/core/univariate.hpp"
#include "dcreg/macaulay/saturation.hpp"

namespace dcreg::branch {

using macaulay::GradedIdeal;
using macaulay::LinearReduction;
using macaulay::membership_by_degree;
using macaulay::reduce_linear;

const char* to_string(SplitObstruction::Kind k) {
  return k == SplitObstruction::Kind::IrreducibleCertified ? "IrreducibleCertified" : "SplitNotExcluded";
}

const char* to_string(BranchObstruction::Kind k) {
  switch (k) {
    case BranchObstruction::Kind::IrreducibleCertified: return "IrreducibleCertified";
    case BranchObstruction::Kind::ContainedInBranch: return "ContainedInBranch";
    case BranchObstruction::Kind::SplitNotExcluded: return "SplitNotExcluded";
  }
  return "?";
}

SplitObstruction cover_split_obstruction(const PolyFp& g, const GradedIdeal& I, int l, int e) {
  if (l < 1) throw std::invalid_argument("cover_split_obstruction: l must be positive");
  if (!g.ring()->same_as(*I.ring())) throw std::invalid_argument("cover_split_obstruction: ring mismatch");
  SplitObstruction out;
  out.saturation_level = e;
  auto ex = expand_sqrt(g, 2 * l);
  LinearReduction red = reduce_linear(I);
  for (int k = l + 1; k <= 2 * l; ++k) {
    out.tested.push_back(k);
    if (!membership_by_degree(red, ex.h(k), e)) {
      out.kind = SplitObstruction::Kind::IrreducibleCertified;
      out.witness = k;
      return out;
    }
  }
  out.square_root = ex.truncation(l);
  PolyFp diff = g - out.square_root * out.square_root;
  bool ok = true;
  for (int d = 0; d <= diff.degree() && ok; ++d) ok = membership_by_degree(red, diff.homogeneous_component(d), e);
  out.square_witness_verified = ok;
  return out;
}

namespace {

using univariate::UPoly;
using univariate::trim;

// coefficients of c -> det(G - c Q) by interpolation at 0..n
UPoly pencil_polynomial(const Matrix<Fp>& G, const Matrix<Fp>& Q, const PrimeField& F) {
  size_t n = G.size();
  if (F.modulus() <= n) throw std::domain_error("pencil: field too small for interpolation");
  std::vector<Fp> xs, ys;
  for (size_t t = 0; t <= n; ++t) {
    Fp c = F(static_cast<int64_t>(t));
    Matrix<Fp> A = G;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) A[i][j] -= c * Q[i][j];
    xs.push_back(c);
    ys.push_back(determinant(A, F));
  }
  UPoly result(n + 1, F.zero());
  for (size_t i = 0; i <= n; ++i) {
    UPoly basis{F.one()};
    Fp denom = F.one();
    for (size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      UPoly next(basis.size() + 1, F.zero());
      for (size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    Fp scale = ys[i] / denom;
    for (size_t k = 0; k < basis.size(); ++k) result[k] += basis[k] * scale;
  }
  trim(result);
  return result;
}

}  // namespace

BranchObstruction branch_vertex_obstruction(const PolyFp& g, const GradedIdeal& I, int e) {
  if (!g.constant_term().is_zero()) throw std::invalid_argument("branch_vertex_obstruction: g must vanish at the origin");
  BranchObstruction out;
  LinearReduction red = reduce_linear(I);
  int k = -1;
  for (int d = 1; d <= g.degree(); ++d) {
    if (!membership_by_degree(red, g.homogeneous_component(d), e)) {
      k = d;
      break;
    }
  }
  if (k < 0) {
    out.kind = BranchObstruction::Kind::ContainedInBranch;
    return out;
  }
  out.lowest_degree = k;
  if (k % 2 == 1) {
    out.kind = BranchObstruction::Kind::IrreducibleCertified;
    out.method = "odd-degree";
    return out;
  }
  if (k != 2) return out;
  const PrimeField& F = red.ring->field();
  int n = red.ring->nvars();
  std::vector<PolyFp> quadrics;
  for (const auto& q : red.generators)
    if (q.degree() == 2) quadrics.push_back(q);
  Matrix<Fp> span;
  auto idx = macaulay::MonomialIndex(n, 2);
  for (const auto& q : quadrics) {
    std::vector<Fp> v(idx.size(), F.zero());
    for (const auto& t : q.terms()) v[idx.at(t.mono)] = t.coef;
    span.push_back(std::move(v));
  }
  int dim = span.empty() ? 0 : matrix_rank(span);
  out.quadrics_in_ideal = dim;
  PolyFp g2 = red.reduce(g.homogeneous_component(2));
  if (dim == 0) {
    out.quadric_rank = quadratic_rank(g2);
    if (out.quadric_rank >= 2) {
      out.kind = BranchObstruction::Kind::IrreducibleCertified;
      out.method = "rank";
    }
    return out;
  }
  if (dim == 1 && n >= 3) {
    // independent quadric generator spanning I_2
    size_t which = 0;
    while (quadrics[which].is_zero()) ++which;
    auto G = QuadraticForm<Fp>::from_poly(g2).gram();
    auto Q = QuadraticForm<Fp>::from_poly(quadrics[which]).gram();
    UPoly P = pencil_polynomial(G, Q, F);
    if (P.empty()) return out;
    out.pencil_degree = static_cast<int>(P.size()) - 1;
    UPoly dP = univariate::derivative(P);
    bool squarefree = P.size() == 1 || (!dP.empty() && univariate::gcd(P, dP).size() == 1);
    if (squarefree) {
      out.kind = BranchObstruction::Kind::IrreducibleCertified;
      out.method = "pencil";
    }
  }
  return out;
}

}  // namespace dcreg::branch
