#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dcreg/regularity/instance.hpp"

namespace dcreg::regularity {

// SplitMix64 finalizer, used to derive independent streams from one seed.
uint64_t splitmix(uint64_t x);
uint64_t derive_seed(uint64_t seed, uint64_t a, uint64_t b = 0);

// Platform-independent draws: std distributions are not specified bit-exactly.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  // uniform in [0, n), n > 0
  uint64_t below(uint64_t n);
  Fp element(const PrimeField& F) { return F.from_u64(below(F.modulus())); }
  Fp nonzero(const PrimeField& F) { return F.from_u64(1 + below(F.modulus() - 1)); }

 private:
  std::mt19937_64 eng_;
};

// Requirement on a generated instance at a given point.
struct PointConstraint {
  enum class Kind { OnQ, OnBranch, OffBranchUnit };  // OffBranchUnit: f(p) = 0, g(p) = 1
  Point point;
  Kind kind = Kind::OnQ;
};

// Dense random f (degree m) and g (degree 2l) over F_p, adjusted to satisfy
// the constraints. Throws if the constraints are infeasible.
DoubleCoverInstance random_instance(int M, int m, int l, uint64_t p, bool toy, uint64_t seed,
                                    const std::vector<PointConstraint>& constraints = {});

Point random_point(const PrimeField& F, int n, Rng& rng);

// F_p-points of Q = {f = 0} from random lines; retry budget 1000 lines per point.
std::vector<Point> points_on_Q(const DoubleCoverInstance& inst, int count, uint64_t seed);

// random linear form in the given ring (zero allowed unless nonzero = true)
PolyFp random_linear_form(const RingPtr<Fp>& ring, Rng& rng, bool nonzero);

}  // namespace dcreg::regularity
