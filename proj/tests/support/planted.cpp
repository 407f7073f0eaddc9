#include "planted.hpp"

#include "dcreg/core/poly_io.hpp"
#include "dcreg/regularity/sampling.hpp"

namespace planted {

using namespace dcreg;
using namespace dcreg::regularity;

namespace {

const uint32_t kP = 32003;

PolyFp random_part(Rng& rng, const RingPtr<Fp>& ring, int lo, int hi) {
  PolyFp out(ring);
  const auto& F = ring->field();
  for (int d = lo; d <= hi; ++d)
    for (const auto& mono : monomials_of_degree(ring->nvars(), d))
      out += PolyFp::monomial(ring, mono, rng.element(F));
  return out;
}

PolyFp lift(const RingPtr<Fp>& ring, const std::string& s) { return parse_poly(ring, s); }

}  // namespace

DoubleCoverInstance exact_square(uint64_t seed) {
  auto base = random_instance(6, 3, 4, kP, false, seed, {{Point(7, 0), PointConstraint::Kind::OffBranchUnit}});
  Rng rng(derive_seed(seed, 1));
  PolyFp s = lift(base.ring, "1") + random_part(rng, base.ring, 1, 4);
  return make_instance(6, 3, 4, kP, false, base.f, s * s);
}

DoubleCoverInstance low_rank_w2(uint64_t seed) {
  auto base = random_instance(6, 3, 4, kP, false, seed, {{Point(7, 0), PointConstraint::Kind::OnBranch}});
  const auto& R = base.ring;
  Rng rng(derive_seed(seed, 2));
  PolyFp f = base.f - base.f.homogeneous_component(1) + lift(R, "z7");
  PolyFp w2 = lift(R, "z2^2 + z3^2 + z4^2") + lift(R, "z1") * random_part(rng, R, 1, 1) +
              lift(R, "z7") * random_part(rng, R, 1, 1);
  PolyFp g = base.g - base.g.homogeneous_component(1) - base.g.homogeneous_component(2) + lift(R, "z1") + w2;
  return make_instance(6, 3, 4, kP, false, f, g);
}

DoubleCoverInstance vanishing_q2_q3(uint64_t seed) {
  auto base = random_instance(6, 3, 4, kP, false, seed, {{Point(7, 0), PointConstraint::Kind::OffBranchUnit}});
  return make_instance(6, 3, 4, kP, false, lift(base.ring, "z7"), base.g);
}

DoubleCoverInstance type1(uint64_t seed, int M, int m, int l) {
  auto base = random_instance(M, m, l, kP, false, seed, {{Point(M + 1, 0), PointConstraint::Kind::OffBranchUnit}});
  const auto& R = base.ring;
  PolyFp q2(R);
  for (int i = 0; i <= M; ++i) q2 += PolyFp::monomial(R, Monomial::var(i, 2), R->field()(i + 1));
  PolyFp f = base.f - base.f.homogeneous_component(1) - base.f.homogeneous_component(2) + q2;
  return make_instance(M, m, l, kP, false, f, base.g);
}

DoubleCoverInstance type2(uint64_t seed, bool defective) {
  auto base = random_instance(6, 3, 4, kP, false, seed, {{Point(7, 0), PointConstraint::Kind::OnBranch}});
  const auto& R = base.ring;
  Rng rng(derive_seed(seed, 3));
  PolyFp q2(R);
  int last = defective ? 5 : 6;  // z1..z_last squared, all in {z7 = 0}
  for (int i = 0; i < last; ++i) q2 += PolyFp::monomial(R, Monomial::var(i, 2), R->field()(i + 2));
  q2 += lift(R, "z7") * random_part(rng, R, 1, 1);
  PolyFp f = lift(R, "z7") + q2 + base.f.homogeneous_component(3);
  PolyFp g = base.g - base.g.homogeneous_component(1) + lift(R, "3*z7");
  return make_instance(6, 3, 4, kP, false, f, g);
}

}  // namespace planted
