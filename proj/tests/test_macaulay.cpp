#include "doctest.h"

#include <random>

#include "dcreg/core/poly_io.hpp"
#include "dcreg/macaulay/hilbert.hpp"
#include "dcreg/macaulay/irreducibility.hpp"
#include "dcreg/macaulay/rank.hpp"
#include "dcreg/macaulay/saturation.hpp"
#include "support/oracles.hpp"
#include "support/random_polys.hpp"

using namespace dcreg;
using namespace dcreg::macaulay;
using testing_util::dense_form;
using testing_util::random_poly;

namespace {

RingPtr<Fp> ring_fp(int n, uint32_t p = 32003) { return make_ring<Fp>(standard_names(n), PrimeField(p)); }

std::vector<PolyFp> polys(const RingPtr<Fp>& R, std::initializer_list<const char*> texts) {
  std::vector<PolyFp> out;
  for (const char* t : texts) out.push_back(parse_poly(R, t));
  return out;
}

}  // namespace

TEST_CASE("hilbert function examples") {
  auto R2 = ring_fp(2);
  CHECK(hilbert_function(GradedIdeal(R2, polys(R2, {"z1"})), 3) == 1);
  auto R3 = ring_fp(3);
  CHECK(hilbert_function(GradedIdeal(R3, {}), 2) == 6);
  CHECK(hilbert_function(GradedIdeal(R3, polys(R3, {"z1^2", "z2^2"})), 2) == 4);
}

TEST_CASE("koszul coefficients") {
  CHECK(koszul_coefficient({}, 3, 2) == 6);
  CHECK(koszul_coefficient({2}, 2, 5) == 2);
  for (int d = 1; d <= 6; ++d) CHECK(koszul_coefficient({1, 1}, 2, d) == 0);
  // (1 - t^2)^3 / (1 - t)^3 = (1 + t)^3
  CHECK(koszul_coefficient({2, 2, 2}, 3, 3) == 1);
  CHECK(koszul_coefficient({2, 2, 2}, 3, 4) == 0);
  CHECK(koszul_coefficient({3}, 1, 4) == 0);
  CHECK(koszul_coefficient({2, 2}, 1, 2) == -1);
}

TEST_CASE("rank kernel agrees with scalar elimination") {
  std::mt19937_64 rng(31);
  for (uint32_t p : {3u, 101u, 32003u}) {
    for (int t = 0; t < 12; ++t) {
      size_t rows = 1 + rng() % 300, cols = 1 + rng() % 300, r = 1 + rng() % 200;
      // product of random rows x r and r x cols factors has rank <= r
      std::vector<uint64_t> A(rows * r), B(r * cols), C(rows * cols, 0);
      for (auto& x : A) x = rng() % p;
      for (auto& x : B) x = rng() % p;
      for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < r; ++k)
          for (size_t j = 0; j < cols; ++j) C[i * cols + j] = (C[i * cols + j] + A[i * r + k] * B[k * cols + j]) % p;
      std::vector<double> D(C.begin(), C.end());
      auto Cs = C;
      size_t ref = dense_rank_mod_p_scalar(Cs, rows, cols, p);
      CHECK(ref <= std::min({rows, cols, r}));
      CHECK(dense_rank_mod_p(D, rows, cols, p) == ref);
      std::vector<SparseRow> sparse(rows);
      for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j)
          if (C[i * cols + j]) {
            sparse[i].cols.push_back(static_cast<uint32_t>(j));
            sparse[i].vals.push_back(static_cast<uint32_t>(C[i * cols + j]));
          }
      CHECK(rank_mod_p(sparse, cols, p) == ref);
    }
  }
}

TEST_CASE("hilbert function agrees with dense elimination") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 30; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto R = ring_fp(n, t % 2 ? 32003 : 7);
    std::vector<PolyFp> gens;
    int c = 1 + static_cast<int>(rng() % n);
    for (int i = 0; i < c; ++i) {
      int d = 1 + static_cast<int>(rng() % 3);
      auto g = rng() % 2 ? dense_form(rng, R, d) : random_poly(rng, R, 3, d, d);
      if (!g.is_zero()) gens.push_back(g);
    }
    for (int d = 0; d <= 6; ++d)
      CHECK(hilbert_function(GradedIdeal(R, gens), d) == oracle::hilbert_function_dense(gens, n, d));
  }
}

TEST_CASE("hilbert function does not increase when generators are added") {
  std::mt19937_64 rng(33);
  auto R = ring_fp(4);
  for (int t = 0; t < 10; ++t) {
    std::vector<PolyFp> gens;
    std::vector<int64_t> prev(7, INT64_MAX);
    for (int i = 0; i < 4; ++i) {
      gens.push_back(random_poly(rng, R, 3, 2, 2));
      if (gens.back().is_zero()) gens.pop_back();
      GradedIdeal I(R, gens);
      for (int d = 0; d <= 6; ++d) {
        int64_t h = hilbert_function(I, d);
        CHECK(h <= prev[d]);
        prev[d] = h;
      }
    }
  }
}

TEST_CASE("certificate examples") {
  auto R2 = ring_fp(2);
  CHECK(regular_sequence_certificate(polys(R2, {"z1", "z2"}), 12).verdict == SequenceVerdict::Regular);
  auto R3 = ring_fp(3);
  CHECK(regular_sequence_certificate(polys(R3, {"z1*z2", "z1^2 + z3^2"}), 12).verdict == SequenceVerdict::Regular);
  // the plane z1 = 0 lies in the zero set, so this pair is not regular
  CHECK(regular_sequence_certificate(polys(R3, {"z1*z2", "z1*z3"}), 12).verdict == SequenceVerdict::NotRegular);
  CHECK(oracle::regular_by_point_count(polys(ring_fp(3, 3), {"z1*z2", "z1*z3"}), {2, 2}, 3) == false);
  auto bad = regular_sequence_certificate(polys(R3, {"z1*z2", "z1*z2 + z1*z3", "z1*z3"}), 12);
  CHECK(bad.verdict == SequenceVerdict::NotRegular);
  CHECK(bad.defect_degree == 2);
  // the three coordinate lines: codimension 2, so three quadrics are not regular
  auto lines = regular_sequence_certificate(polys(R3, {"z1*z2", "z1*z3", "z2*z3"}), 12);
  CHECK(lines.verdict == SequenceVerdict::NotRegular);
  CHECK(oracle::regular_by_point_count(polys(ring_fp(3, 3), {"z1*z2", "z1*z3", "z2*z3"}), {2, 2, 2}, 3) == false);
  CHECK_THROWS(regular_sequence_certificate(polys(R2, {"z1", "z2", "z1 + z2"}), 12));
  auto capped = regular_sequence_certificate(polys(R3, {"z1^5", "z2^5", "z3^5"}), 6);
  CHECK(capped.verdict == SequenceVerdict::InconclusiveThrough);
  CHECK(capped.through == 6);
  CHECK(capped.stabilization_bound == 13);
  auto with_zero = regular_sequence_certificate(R3, {parse_poly(R3, "z1"), PolyFp(R3)}, {1, 2}, 12);
  CHECK(with_zero.verdict == SequenceVerdict::NotRegular);
}

TEST_CASE("monomial regular sequences match the koszul series") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 10; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto R = ring_fp(n);
    int c = 1 + static_cast<int>(rng() % n);
    std::vector<PolyFp> gens;
    std::vector<int> degs;
    for (int i = 0; i < c; ++i) {
      int d = 1 + static_cast<int>(rng() % 3);
      gens.push_back(PolyFp::monomial(R, Monomial::var(i, d), R->field().one()));
      degs.push_back(d);
    }
    auto cert = regular_sequence_certificate(gens, 12);
    CHECK(cert.verdict == SequenceVerdict::Regular);
    for (const auto& [d, h] : cert.hilbert.by_degree) CHECK(h == std::max<int64_t>(0, koszul_coefficient(degs, n, d)));
  }
}

TEST_CASE("certificate agrees with the point-count oracle on a small sample") {
  std::mt19937_64 rng(35);
  int disagreements = 0;
  for (int t = 0; t < 60; ++t) {
    int n = 1 + static_cast<int>(rng() % 3);
    int c = 1 + static_cast<int>(rng() % n);
    auto R = ring_fp(n, 3);
    std::vector<PolyFp> gens;
    std::vector<int> degs;
    for (int i = 0; i < c; ++i) {
      int d = 1 + static_cast<int>(rng() % 2);
      gens.push_back(random_poly(rng, R, 1 + static_cast<int>(rng() % 4), d, d));
      degs.push_back(d);
    }
    auto cert = regular_sequence_certificate(R, gens, degs, 12);
    bool regular = oracle::regular_by_point_count(gens, degs, n);
    if ((cert.verdict == SequenceVerdict::Regular) != regular || cert.verdict == SequenceVerdict::InconclusiveThrough)
      ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("saturated linear forms") {
  auto R = ring_fp(3);
  auto L = saturated_linear_forms(GradedIdeal(R, polys(R, {"z1^2", "z1*z2", "z1*z3"})));
  REQUIRE(L.basis.size() == 1);
  CHECK(linear_form(R, L.basis[0]) == parse_poly(R, "z1"));
  CHECK(L.stabilized);
  CHECK(saturated_linear_forms(GradedIdeal(R, polys(R, {"z1*z2"}))).basis.empty());
  CHECK(saturated_linear_forms(GradedIdeal(R, polys(R, {"z1", "z2"}))).basis.size() == 2);
}

TEST_CASE("saturated linear part is invariant under recombining generators") {
  std::mt19937_64 rng(36);
  auto R = ring_fp(4);
  const auto& F = R->field();
  for (int t = 0; t < 8; ++t) {
    // a line's ideal times a random quadric piece keeps a nontrivial linear part
    auto l1 = random_poly(rng, R, 4, 1, 1);
    std::vector<PolyFp> gens{l1 * random_poly(rng, R, 4, 1, 1), l1 * random_poly(rng, R, 4, 1, 1),
                             random_poly(rng, R, 6, 2, 2)};
    auto base = saturated_linear_forms(GradedIdeal(R, gens)).basis;
    std::vector<PolyFp> mixed;
    for (int i = 0; i < 3; ++i) {
      PolyFp s(R);
      for (int j = 0; j < 3; ++j) s += gens[j].scaled(F.from_u64(rng()));
      mixed.push_back(s);
    }
    auto other = saturated_linear_forms(GradedIdeal(R, mixed)).basis;
    CHECK(other == base);
  }
}

TEST_CASE("membership by degree") {
  auto R = ring_fp(3);
  CHECK(membership_by_degree(GradedIdeal(R, polys(R, {"z1"})), parse_poly(R, "z1*z2"), 0));
  CHECK(membership_by_degree(GradedIdeal(R, polys(R, {"z1^2", "z1*z2", "z1*z3"})), parse_poly(R, "z1"), 1));
  CHECK_FALSE(membership_by_degree(GradedIdeal(R, polys(R, {"z1^2", "z1*z2", "z1*z3"})), parse_poly(R, "z1"), 0));
  for (int e = 0; e <= 3; ++e) CHECK_FALSE(membership_by_degree(GradedIdeal(R, polys(R, {"z1^2"})), parse_poly(R, "z2^2"), e));
}

TEST_CASE("irreducibility certificates") {
  auto R = ring_fp(5);
  CHECK(certify_irreducible(GradedIdeal(R, polys(R, {"z1", "z2 - z3"}))).method == "linear");
  auto q = certify_irreducible(GradedIdeal(R, polys(R, {"z1*z2 - z3^2"})));
  CHECK(q.certified);
  CHECK(q.method == "quadric-rank");
  CHECK_FALSE(certify_irreducible(GradedIdeal(R, polys(R, {"z1*z2"}))).certified);
  std::mt19937_64 rng(37);
  auto ci = certify_irreducible(GradedIdeal(R, {dense_form(rng, R, 2), dense_form(rng, R, 3)}));
  CHECK(ci.certified);
  CHECK(ci.method == "smooth-ci");
  // a cone over two points is reducible and must not be certified
  auto R3 = ring_fp(3);
  CHECK_FALSE(certify_irreducible(GradedIdeal(R3, polys(R3, {"z3", "z1*z2"}))).certified);
}
