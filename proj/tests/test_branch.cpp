#include "doctest.h"

#include <random>

#include "dcreg/branch/obstruction.hpp"
#include "dcreg/branch/sqrt_branch.hpp"
#include "dcreg/core/poly_io.hpp"
#include "support/oracles.hpp"
#include "support/random_polys.hpp"

using namespace dcreg;
using namespace dcreg::branch;
using testing_util::random_poly;

namespace {

RingPtr<Fp> ring_fp(int n, uint32_t p = 32003) { return make_ring<Fp>(standard_names(n), PrimeField(p)); }
RingPtr<Rational> ring_q(int n) { return make_ring<Rational>(standard_names(n), RationalField()); }

template <class K>
SparsePoly<K> P(const RingPtr<K>& r, const std::string& s) {
  return parse_poly(r, s);
}

// 1 + random terms of degree 1..dmax
template <class K>
SparsePoly<K> unit_poly(std::mt19937_64& rng, const RingPtr<K>& R, int terms, int dmax) {
  return SparsePoly<K>::constant(R, R->field().one()) + random_poly(rng, R, terms, 1, dmax);
}

// g with components w_from..w_max removed
template <class K>
SparsePoly<K> drop_from(const SparsePoly<K>& g, int from) {
  SparsePoly<K> out(g.ring());
  for (int d = 0; d < from; ++d) out += g.homogeneous_component(d);
  return out;
}

}  // namespace

TEST_CASE("gamma values") {
  CHECK(gamma(1) == Rational(1, 2));
  CHECK(gamma(2) == Rational(-1, 8));
  CHECK(gamma(3) == Rational(1, 16));
  CHECK_THROWS(gamma(0));
}

TEST_CASE("gamma agrees with Newton iteration") {
  auto series = oracle::newton_sqrt_series(12);
  CHECK(series[0] == 1);
  for (int i = 1; i <= 12; ++i) CHECK(gamma(i) == series[i]);
}

TEST_CASE("square-root truncation examples") {
  auto R = ring_q(2);
  CHECK(sqrt_truncation(P(R, "1 + 2*z1 + z1^2"), 3) == P(R, "1 + z1"));
  CHECK(sqrt_truncation(P(R, "1 + z1"), 2) == P(R, "1 + 1/2*z1 - 1/8*z1^2"));
  CHECK(sqrt_truncation(P(R, "1 + z1 + z2^2"), 2) == P(R, "1 + 1/2*z1 + 1/2*z2^2 - 1/8*z1^2"));
  CHECK_THROWS(sqrt_truncation(P(R, "2 + z1"), 2));
  CHECK_THROWS(sqrt_truncation(P(R, "z1"), 2));
}

TEST_CASE("residual components") {
  auto R = ring_q(2);
  CHECK(h_component(P(R, "1 + z1"), 1) == P(R, "-1/4*z1^2"));
  CHECK(h_component(P(R, "1 + z1*z2"), 1) == P(R, "z1*z2"));
  auto s = P(R, "1 + z1 - 3*z2 + z1*z2");
  CHECK(h_component(s * s, 1) == s.homogeneous_component(2).scaled(Rational(2)));
  for (int j = 2; j <= 6; ++j) CHECK(h_component(s * s, j).is_zero());
}

TEST_CASE("residual identity on random unit polynomials") {
  std::mt19937_64 rng(21);
  auto Rq = ring_q(3);
  auto Rp = ring_fp(3);
  for (int t = 0; t < 15; ++t) {
    auto gq = unit_poly(rng, Rq, 12, 6);
    auto gp = unit_poly(rng, Rp, 12, 6);
    for (int j = 1; j <= 6; ++j) {
      auto sq = sqrt_truncation(gq, j);
      auto rq = gq - sq * sq;
      auto sp = sqrt_truncation(gp, j);
      auto rp = gp - sp * sp;
      for (int d = 0; d <= j; ++d) {
        CHECK(rq.homogeneous_component(d).is_zero());
        CHECK(rp.homogeneous_component(d).is_zero());
      }
      CHECK(rq.homogeneous_component(j + 1) == h_component(gq, j));
    }
  }
}

TEST_CASE("Phi_i is w_i/2 plus a polynomial in lower components") {
  std::mt19937_64 rng(22);
  auto R = ring_q(3);
  for (int t = 0; t < 10; ++t) {
    auto g = unit_poly(rng, R, 15, 6);
    for (int i = 1; i <= 6; ++i) {
      auto phi = sqrt_truncation(g, i).homogeneous_component(i);
      auto phi_low = sqrt_truncation(drop_from(g, i), i).homogeneous_component(i);
      CHECK(phi - phi_low == g.homogeneous_component(i).scaled(Rational(1, 2)));
    }
  }
}

TEST_CASE("h_{j+1} - w_{j+1} depends only on w_1..w_j") {
  std::mt19937_64 rng(23);
  auto R = ring_q(3);
  for (int t = 0; t < 10; ++t) {
    auto g = unit_poly(rng, R, 15, 7);
    for (int j = 1; j <= 5; ++j) {
      auto perturbed = drop_from(g, j + 2) + random_poly(rng, R, 6, j + 2, 7);
      auto a = h_component(g, j) - g.homogeneous_component(j + 1);
      auto b = h_component(perturbed, j) - perturbed.homogeneous_component(j + 1);
      CHECK(a == b);
    }
  }
}

TEST_CASE("residuals of exact squares") {
  // g = s^2: h_k = 2 s_k up to deg s and zero beyond
  std::mt19937_64 rng(24);
  auto R = ring_fp(4);
  for (int t = 0; t < 20; ++t) {
    auto s = unit_poly(rng, R, 8, 3);
    auto g = s * s;
    auto ex = expand_sqrt(g, 8);
    for (int k = 2; k <= 8; ++k) CHECK(ex.h(k) == s.homogeneous_component(k).scaled(R->field()(2)));
    CHECK(ex.truncation(s.degree()) == s);
  }
}

TEST_CASE("rational computation reduces to the F_p computation") {
  std::mt19937_64 rng(25);
  auto Rq = ring_q(3);
  auto Rp = ring_fp(3);
  for (int t = 0; t < 10; ++t) {
    auto g = unit_poly(rng, Rq, 10, 5);
    auto gp = reduce_mod(g, Rp);
    for (int j = 1; j <= 6; ++j) {
      CHECK(reduce_mod(sqrt_truncation(g, j), Rp) == sqrt_truncation(gp, j));
      CHECK(reduce_mod(h_component(g, j), Rp) == h_component(gp, j));
    }
  }
}

TEST_CASE("expansion agrees with direct truncations") {
  std::mt19937_64 rng(26);
  auto R = ring_fp(4);
  for (int t = 0; t < 5; ++t) {
    auto g = unit_poly(rng, R, 20, 8);
    auto ex = expand_sqrt(g, 8);
    for (int j = 1; j <= 8; ++j) CHECK(ex.truncation(j) == sqrt_truncation(g, j));
    for (int k = 2; k <= 8; ++k) CHECK(ex.h(k) == h_component(g, k - 1));
  }
}

TEST_CASE("cover splitting obstruction") {
  auto R = ring_fp(2);
  macaulay::GradedIdeal I(R, {P(R, "z2")});
  auto certified = cover_split_obstruction(P(R, "1 + z1^2"), I, 1);
  CHECK(certified.kind == SplitObstruction::Kind::IrreducibleCertified);
  CHECK(certified.witness == 2);
  auto open = cover_split_obstruction(P(R, "1 + z2^2"), I, 1);
  CHECK(open.kind == SplitObstruction::Kind::SplitNotExcluded);
  auto square = cover_split_obstruction(P(R, "1 + 2*z1 + z1^2"), I, 1);
  CHECK(square.kind == SplitObstruction::Kind::SplitNotExcluded);
  CHECK(square.square_witness_verified);

  auto R4 = ring_fp(4);
  std::mt19937_64 rng(27);
  auto s = unit_poly(rng, R4, 10, 2);
  macaulay::GradedIdeal J(R4, {P(R4, "z1*z2 - z3^2")});
  auto sq = cover_split_obstruction(s * s, J, 2);
  CHECK(sq.kind == SplitObstruction::Kind::SplitNotExcluded);
  CHECK(sq.square_witness_verified);
  auto gen = cover_split_obstruction(unit_poly(rng, R4, 30, 4), J, 2);
  CHECK(gen.kind == SplitObstruction::Kind::IrreducibleCertified);
}

TEST_CASE("branch vertex obstruction") {
  auto R = ring_fp(4);
  macaulay::GradedIdeal I(R, {P(R, "z1*z2 - z3*z4")});
  CHECK(branch_vertex_obstruction(P(R, "z1 + z2^2"), I).kind == BranchObstruction::Kind::IrreducibleCertified);
  auto sq = branch_vertex_obstruction(P(R, "z1^2 + z1^3"), I);
  CHECK(sq.kind == BranchObstruction::Kind::SplitNotExcluded);
  CHECK(sq.lowest_degree == 2);
  CHECK(branch_vertex_obstruction(P(R, "z1*z2 - z3*z4"), I).kind == BranchObstruction::Kind::ContainedInBranch);
  auto q = branch_vertex_obstruction(P(R, "z1^2 + 2*z2^2 + 3*z3^2 + 5*z4^2"), I);
  CHECK(q.kind == BranchObstruction::Kind::IrreducibleCertified);
  CHECK(q.method == "pencil");
  // det(G - cQ) has a double root at c = 0 here, so the pencil test is silent
  auto r = branch_vertex_obstruction(P(R, "z1^2 + z2^2 + z3^2"), I);
  CHECK(r.kind == BranchObstruction::Kind::SplitNotExcluded);
}
