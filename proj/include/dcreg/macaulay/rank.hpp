#pragma once

#include <cstdint>
#include <vector>

namespace dcreg::macaulay {

// Sparse row over F_p: column indices strictly ascending, values in [1, p).
struct SparseRow {
  std::vector<uint32_t> cols;
  std::vector<uint32_t> vals;
};

struct RankStats {
  size_t structural_pivots = 0;
  size_t dense_rows = 0;
  size_t dense_cols = 0;
};

// Rank over F_p of the matrix with the given rows. Column 0 should be the
// largest monomial so that leading entries follow the term order.
size_t rank_mod_p(const std::vector<SparseRow>& rows, size_t ncols, uint32_t p, RankStats* stats = nullptr);

// Rank of a dense row-major matrix with entries in [0, p); the buffer is
// overwritten. Uses blocked elimination with BLAS updates when the entry
// bound allows exact double arithmetic.
size_t dense_rank_mod_p(std::vector<double>& a, size_t rows, size_t cols, uint32_t p);

// Plain scalar reference elimination, used for large moduli and in tests.
size_t dense_rank_mod_p_scalar(std::vector<uint64_t>& a, size_t rows, size_t cols, uint32_t p);

}  // namespace dcreg::macaulay
