#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "dcreg/core/rational.hpp"

namespace dcreg::census {

using Json = nlohmann::ordered_json;

// min over j = 0..k of (mu_{j+1} - j)(N - j) + 1, mu_j the smallest sum of j degrees
BigInt prop41_bound(int N, std::vector<int> degrees);

// C(2l + k - 1, k - 1)
BigInt lemma41_codim(int l, int k);

// (k+5)(k+3)k(k-2)/24 + 1
BigInt alpha(int k);

// C(M+2, 4) - M^2 + 3
BigInt quartic_reducibility_codim(int M);

struct HypertangentSchedule {
  int m = 0, l = 0;
  std::vector<int> M_set, L_set;
  std::vector<int> k;  // sorted multiset, k[0] = k(1)
  // #([1,t] cap L_set) + #([1,t] cap M_set)
  int base_codim(int t) const;
  bool ordering_holds() const;  // base_codim(k(i)) >= i for every i
};
HypertangentSchedule hypertangent_schedule(int m, int l);

struct TelescopingResult {
  Rational value;
  bool at_least_m_over_3 = false;
  std::string closed_form_name;  // "m(2l-1)/(5l)", "3m/8", "m/3"
  Rational closed_form;
  bool closed_form_match = false;
};
// product over sorted schedule positions 5..M-1 of (k(i)+1)/k(i), collapsed run by run
TelescopingResult telescoping_product(int m, int l);

struct LedgerInputs {
  int m = 3, n = 1;
  Rational a = 0;  // mult_o D_T
  Rational b = 0;  // mult_{B_T} D_T^+
  // optional data for the sub-identities
  std::optional<Rational> mult_o_D, excess, mult_B_D;
};
struct LedgerAudit {
  BigInt deg_Y_m;                   // 2 n m!
  std::vector<Rational> mult_o_Y;  // (i!/2) a for i = 1..m
  Rational lhs, rhs;                // (a + 2b) m! and 4n m!
  bool reduced_inequality = false;  // a + 2b <= 4n
  bool consistent = false;
  std::optional<bool> c2_holds, c3_holds;
};
LedgerAudit ledger_audit(const LedgerInputs& in);

// nu + multB <= 2n
bool prop51_bound_check(const Rational& n, const Rational& nu, const Rational& multB);

struct CensusRow {
  int M = 0, m = 0, l = 0;
  std::optional<BigInt> e2;  // m = 3 only: C(3M-8, M-4)
  BigInt lemma41, binom_M4;
  BigInt quartic;
  BigInt alpha_min;          // min of 2 alpha_k - alpha_{k-1} over the k-range
  int alpha_min_k = 0, alpha_k_lo = 0, alpha_k_hi = 0;
  BigInt alpha_top;          // alpha_{M-2}
  std::optional<BigInt> prop41;  // absent when k = m - 1 exceeds N - 1
  std::vector<int> prop41_degrees;
  int schedule_size = 0;
  bool schedule_ordering = false;
  TelescopingResult tele;
  std::vector<std::pair<std::string, bool>> checks;
  bool pass() const;
};
struct CensusTable {
  int M_lo = 0, M_hi = 0;
  std::vector<CensusRow> rows;
  bool all_pass() const;
};
CensusTable census_table(int M_lo, int M_hi);

Json census_to_json(const CensusTable& t);
std::string census_to_text(const CensusTable& t);
Json audit_to_json(const LedgerInputs& in, const LedgerAudit& a);

}  // namespace dcreg::census
