#include "dcreg/macaulay/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace dcreg::macaulay {

int64_t koszul_coefficient(const std::vector<int>& degrees, int n_amb, int d) {
  if (d < 0) return 0;
  for (int di : degrees)
    if (di < 1) throw std::invalid_argument("koszul_coefficient: degrees must be positive");
  std::vector<int64_t> s(d + 1, 0);
  s[0] = 1;
  for (int di : degrees)
    for (int k = d; k >= di; --k) s[k] -= s[k - di];
  for (int i = 0; i < n_amb; ++i)
    for (int k = 1; k <= d; ++k) s[k] += s[k - 1];
  return s[d];
}

namespace {

int64_t hf_reduced(const LinearReduction& red, int d) {
  int n = red.ring->nvars();
  MonomialIndex index(n, d);
  if (index.size() == 0) return 0;
  auto rows = macaulay_rows(red.generators, n, index, d);
  size_t rk = rank_mod_p(rows, index.size(), red.ring->field().modulus());
  return static_cast<int64_t>(index.size() - rk);
}

}  // namespace

int64_t hilbert_function(const GradedIdeal& I, int d) {
  if (d < 0) throw std::invalid_argument("hilbert_function: negative degree");
  return hf_reduced(reduce_linear(I), d);
}

HilbertTable hilbert_table(const RingPtr<Fp>& ring, const std::vector<PolyFp>& gens, int dmax) {
  std::vector<PolyFp> nz;
  for (const auto& g : gens)
    if (!g.is_zero()) nz.push_back(g);
  GradedIdeal I(ring, nz);
  LinearReduction red = reduce_linear(I);
  HilbertTable t;
  for (int d = 0; d <= dmax; ++d) t.by_degree.emplace_back(d, hf_reduced(red, d));
  return t;
}

std::string SequenceCertificate::verdict_string() const {
  switch (verdict) {
    case SequenceVerdict::Regular: return "Regular";
    case SequenceVerdict::NotRegular: return "NotRegular(" + std::to_string(defect_degree) + ")";
    case SequenceVerdict::InconclusiveThrough: return "InconclusiveThrough(" + std::to_string(through) + ")";
  }
  return "?";
}

SequenceCertificate regular_sequence_certificate(const RingPtr<Fp>& ring, const std::vector<PolyFp>& polys,
                                                 const std::vector<int>& degrees, int d_cap) {
  if (polys.size() != degrees.size()) throw std::invalid_argument("certificate: degree list length mismatch");
  int n = ring->nvars();
  if (static_cast<int>(polys.size()) > n)
    throw std::invalid_argument("certificate: more forms than variables, a sequence that long cannot be regular");
  std::vector<PolyFp> nz;
  for (size_t i = 0; i < polys.size(); ++i) {
    if (degrees[i] < 1) throw std::invalid_argument("certificate: degrees must be positive");
    if (polys[i].is_zero()) continue;
    if (!polys[i].is_homogeneous() || polys[i].degree() != degrees[i])
      throw std::invalid_argument("certificate: form is not homogeneous of its declared degree");
    nz.push_back(polys[i]);
  }
  SequenceCertificate cert;
  cert.degrees = degrees;
  cert.n_amb = n;
  cert.cap = d_cap;
  int bound = 1;
  for (int d : degrees) bound += d - 1;
  cert.stabilization_bound = bound;
  int D = std::min(d_cap, bound);
  LinearReduction red = reduce_linear(GradedIdeal(ring, nz));
  for (int d = 0; d <= D; ++d) {
    int64_t actual = hf_reduced(red, d);
    int64_t expected = std::max<int64_t>(0, koszul_coefficient(degrees, n, d));
    cert.hilbert.by_degree.emplace_back(d, actual);
    cert.koszul_reference.emplace_back(d, expected);
    cert.through = d;
    if (actual > expected) {
      cert.verdict = SequenceVerdict::NotRegular;
      cert.defect_degree = d;
      return cert;
    }
    if (actual < expected) {
      cert.anomaly = true;
      cert.anomaly_degree = d;
      cert.verdict = SequenceVerdict::InconclusiveThrough;
      return cert;
    }
  }
  cert.verdict = D >= bound ? SequenceVerdict::Regular : SequenceVerdict::InconclusiveThrough;
  return cert;
}

SequenceCertificate regular_sequence_certificate(const std::vector<PolyFp>& polys, int d_cap) {
  if (polys.empty()) throw std::invalid_argument("certificate: empty list needs an explicit ring");
  std::vector<int> deg;
  for (const auto& p : polys) {
    if (p.is_zero()) throw std::invalid_argument("certificate: zero form needs an explicit degree");
    deg.push_back(p.degree());
  }
  return regular_sequence_certificate(polys.front().ring(), polys, deg, d_cap);
}

}  // namespace dcreg::macaulay
