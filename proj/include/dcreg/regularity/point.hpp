#pragma once

#include <string>

#include "dcreg/core/linalg.hpp"
#include "dcreg/regularity/instance.hpp"

namespace dcreg::regularity {

enum class BranchFlag { OutsideBranch, OnBranch };
enum class SingularFlag { Smooth, Type1, Type2 };

const char* to_string(BranchFlag b);
const char* to_string(SingularFlag s);

// Local picture at a point of Q: the point moved to the origin and a linear
// frame u = T z applied. Outside the branch g is scaled to g(0) = 1.
// On the branch (smooth): q1 = u_{M+1}, w1 = u_1. Type2: q1 = u_{M+1} and
// g = alpha u_{M+1} + w2 + ...
struct PointContext {
  Point point;
  BranchFlag branch = BranchFlag::OutsideBranch;
  SingularFlag singular = SingularFlag::Smooth;
  Matrix<Fp> frame;  // T, rows are the new coordinates as forms in the translated old ones
  PolyFp f, g;       // local equations in z1..z_{M+1}
};

PointContext classify_point(const DoubleCoverInstance& inst, const Point& pt);

// Hyperplane y + lambda = 0 (y_coefficient != 0) or lambda = 0 on the double cover.
struct HyperplaneClass {
  PolyFp lambda;
  Fp y_coefficient;
};
enum class HyperplaneKind { PulledBack, NotPulledBack };
HyperplaneKind classify_hyperplane(const HyperplaneClass& B);
const char* to_string(HyperplaneKind k);

// linear part as a coefficient vector
std::vector<Fp> linear_coefficients(const PolyFp& P);

}  // namespace dcreg::regularity
