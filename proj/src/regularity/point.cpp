#include "dcreg/regularity/point.hpp"

#include <stdexcept>

#include "dcreg/core/quadratic_form.hpp"
#include "dcreg/core/substitution.hpp"

namespace dcreg::regularity {

const char* to_string(BranchFlag b) { return b == BranchFlag::OnBranch ? "on-branch" : "outside-branch"; }

const char* to_string(SingularFlag s) {
  switch (s) {
    case SingularFlag::Smooth: return "smooth";
    case SingularFlag::Type1: return "type1";
    case SingularFlag::Type2: return "type2";
  }
  return "?";
}

const char* to_string(HyperplaneKind k) { return k == HyperplaneKind::PulledBack ? "pulled-back" : "not-pulled-back"; }

std::vector<Fp> linear_coefficients(const PolyFp& P) {
  std::vector<Fp> v(P.nvars(), P.zero_scalar());
  for (const auto& t : P.terms())
    if (t.mono.degree() == 1) v[t.mono.last_var()] = t.coef;
  return v;
}

namespace {

bool is_zero_vec(const std::vector<Fp>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Invertible T whose row at positions[i] is forms[i]; the remaining rows are
// coordinate vectors e_j for the non-pivot columns, in increasing order.
Matrix<Fp> complete_frame(const PrimeField& F, int n, const std::vector<std::vector<Fp>>& forms, const std::vector<int>& positions) {
  Matrix<Fp> A = forms;
  auto piv = rref(A);
  if (piv.size() != forms.size()) throw std::domain_error("frame forms are linearly dependent");
  std::vector<bool> used(n, false);
  for (int c : piv) used[c] = true;
  std::vector<bool> taken(n, false);
  for (int pos : positions) taken[pos] = true;
  Matrix<Fp> T = zero_matrix<Fp>(F, n, n);
  for (size_t i = 0; i < forms.size(); ++i) T[positions[i]] = forms[i];
  int j = 0;
  for (int row = 0; row < n; ++row) {
    if (taken[row]) continue;
    while (used[j]) ++j;
    T[row][j] = F.one();
    ++j;
  }
  return T;
}

}  // namespace

PointContext classify_point(const DoubleCoverInstance& inst, const Point& pt) {
  const auto& F = inst.field();
  const int n = inst.nvars();
  auto a = to_field(inst, pt);
  if (!inst.f.evaluate(a).is_zero()) throw std::invalid_argument("point does not lie on Q (f(p) != 0)");

  PointContext ctx;
  ctx.point = pt;
  PolyFp f = translate(inst.f, a);
  PolyFp g = translate(inst.g, a);
  Fp g0 = g.constant_term();
  auto q1 = linear_coefficients(f);
  auto w1 = linear_coefficients(g);
  bool q1_zero = is_zero_vec(q1);
  ctx.branch = g0.is_zero() ? BranchFlag::OnBranch : BranchFlag::OutsideBranch;

  std::vector<std::vector<Fp>> forms;
  std::vector<int> positions;
  if (!g0.is_zero()) {
    g = g.scaled(g0.inv());
    if (q1_zero) {
      int r = quadratic_rank(f.homogeneous_component(2));
      if (r < n)
        throw std::invalid_argument("singular point of Q outside the branch is not a nondegenerate quadratic point (rank " +
                                    std::to_string(r) + " < " + std::to_string(n) + ")");
      ctx.singular = SingularFlag::Type1;
    } else {
      forms = {q1};
      positions = {n - 1};
    }
  } else {
    if (q1_zero) throw std::invalid_argument("singular point of Q on the branch divisor is outside the supported types");
    Matrix<Fp> pair = {q1, w1};
    if (matrix_rank(pair) == 2) {
      forms = {w1, q1};
      positions = {0, n - 1};
    } else {
      ctx.singular = SingularFlag::Type2;
      forms = {q1};
      positions = {n - 1};
    }
  }

  ctx.frame = forms.empty() ? identity_matrix<Fp>(F, n) : complete_frame(F, n, forms, positions);
  auto S = LinearSubstitution<Fp>::linear_change(inst.ring, inverse_matrix(ctx.frame, F));
  ctx.f = S.apply(f);
  ctx.g = S.apply(g);
  return ctx;
}

HyperplaneKind classify_hyperplane(const HyperplaneClass& B) {
  if (!B.y_coefficient.is_zero()) return HyperplaneKind::NotPulledBack;
  if (B.lambda.is_zero()) throw std::invalid_argument("zero hyperplane");
  return HyperplaneKind::PulledBack;
}

}  // namespace dcreg::regularity
