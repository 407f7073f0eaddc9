#pragma once

#include <cstdint>
#include <vector>

#include "dcreg/regularity/point.hpp"
#include "dcreg/regularity/report.hpp"

namespace dcreg::regularity {

struct CheckOptions {
  int lambda_samples = 20;
  int d_cap = 12;
  int e_max = 4;      // saturation level for linear parts and memberships
  int hyperplanes = 5;  // random sections in (R1.3), besides the tangent one
  uint64_t seed = 0;
  int threads = 1;
};

// (R1.1)-(R1.3) at a smooth point outside the branch divisor
std::vector<ConditionEntry> check_outside_branch(const DoubleCoverInstance& inst, const PointContext& ctx,
                                                 const CheckOptions& opt, uint64_t seed);
// (R2.1)-(R2.3) at a smooth point on the branch divisor
std::vector<ConditionEntry> check_on_branch(const DoubleCoverInstance& inst, const PointContext& ctx,
                                            const CheckOptions& opt, uint64_t seed);
// (R1.4) or (R2.4) at a singular point of Q
std::vector<ConditionEntry> check_fiber_singularity(const DoubleCoverInstance& inst, const PointContext& ctx,
                                                    const CheckOptions& opt, uint64_t seed);

PointReport check_point(const DoubleCoverInstance& inst, const Point& pt, size_t index, const CheckOptions& opt);

// Points are checked independently (in parallel for threads > 1); the
// report is ordered by point index and does not depend on the thread count.
RegularityReport run_full_report(const DoubleCoverInstance& inst, const std::vector<Point>& points,
                                 const CheckOptions& opt);

// Structured linear forms used for universally quantified conditions:
// optionally the zero form, every coordinate form, the all-ones form, then
// `samples` random forms drawn in sequence (so longer lists extend shorter ones).
struct LambdaSample {
  std::string kind;
  PolyFp form;
};
std::vector<LambdaSample> lambda_list(const RingPtr<Fp>& ring, bool include_zero, int samples, uint64_t seed);

}  // namespace dcreg::regularity
