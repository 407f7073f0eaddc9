#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcreg/macaulay/graded_ideal.hpp"

namespace dcreg::macaulay {

struct HilbertTable {
  std::vector<std::pair<int, int64_t>> by_degree;
  int max_degree() const { return by_degree.empty() ? -1 : by_degree.back().first; }
};

// coefficient of t^d in prod_i (1 - t^{d_i}) / (1 - t)^n
int64_t koszul_coefficient(const std::vector<int>& degrees, int n_amb, int d);

// dim (R/I)_d
int64_t hilbert_function(const GradedIdeal& I, int d);

// Hilbert function for degrees 0..dmax, sharing the linear reduction
HilbertTable hilbert_table(const RingPtr<Fp>& ring, const std::vector<PolyFp>& gens, int dmax);

enum class SequenceVerdict { Regular, NotRegular, InconclusiveThrough };

struct SequenceCertificate {
  SequenceVerdict verdict = SequenceVerdict::InconclusiveThrough;
  int defect_degree = -1;     // NotRegular: first degree with actual > expected
  int through = -1;           // last degree compared
  int cap = 0;
  int stabilization_bound = 0;
  bool anomaly = false;       // actual < expected somewhere
  int anomaly_degree = -1;
  std::vector<int> degrees;
  int n_amb = 0;
  HilbertTable hilbert;
  std::vector<std::pair<int, int64_t>> koszul_reference;  // clamped at 0

  std::string verdict_string() const;
};

// Forms may be zero (declared degrees are then used for the reference
// series, and a zero form makes the sequence non-regular).
SequenceCertificate regular_sequence_certificate(const RingPtr<Fp>& ring, const std::vector<PolyFp>& polys,
                                                 const std::vector<int>& degrees, int d_cap);
// nonzero homogeneous forms; degrees read off the forms
SequenceCertificate regular_sequence_certificate(const std::vector<PolyFp>& polys, int d_cap);

}  // namespace dcreg::macaulay
