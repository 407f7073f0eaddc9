#include "dcreg/census/census.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace dcreg::census {

BigInt prop41_bound(int N, std::vector<int> degrees) {
  if (degrees.empty()) throw std::invalid_argument("prop41_bound: need at least one degree");
  int k = static_cast<int>(degrees.size()) - 1;
  if (N < 1 || k > N - 1) throw std::invalid_argument("prop41_bound: need 0 <= k <= N - 1");
  for (int d : degrees)
    if (d < 2) throw std::invalid_argument("prop41_bound: degrees must be at least 2");
  std::sort(degrees.begin(), degrees.end());
  BigInt best = -1, mu = 0;
  for (int j = 0; j <= k; ++j) {
    mu += degrees[j];  // mu_{j+1}
    BigInt v = (mu - j) * (N - j) + 1;
    if (best < 0 || v < best) best = v;
  }
  return best;
}

BigInt lemma41_codim(int l, int k) {
  if (l < 2 || k < 2) throw std::invalid_argument("lemma41_codim: need l >= 2 and k >= 2");
  return binomial(2 * l + k - 1, k - 1);
}

BigInt alpha(int k) {
  if (k < 2) throw std::invalid_argument("alpha: need k >= 2");
  BigInt v = BigInt(k + 5) * (k + 3) * k * (k - 2);
  if (v % 24 != 0) throw std::logic_error("alpha: product not divisible by 24");
  return v / 24 + 1;
}

BigInt quartic_reducibility_codim(int M) {
  if (M < 1) throw std::invalid_argument("quartic_reducibility_codim: M must be positive");
  return binomial(M + 2, 4) - BigInt(M) * M + 3;
}

int HypertangentSchedule::base_codim(int t) const {
  int c = 0;
  for (int x : L_set) c += x <= t;
  for (int x : M_set) c += x <= t;
  return c;
}

bool HypertangentSchedule::ordering_holds() const {
  for (size_t i = 0; i < k.size(); ++i)
    if (base_codim(k[i]) < static_cast<int>(i) + 1) return false;
  return true;
}

HypertangentSchedule hypertangent_schedule(int m, int l) {
  if (m < 3 || l < 2) throw std::invalid_argument("hypertangent_schedule: need m >= 3 and l >= 2");
  HypertangentSchedule s;
  s.m = m;
  s.l = l;
  for (int i = 1; i <= m - 1; ++i) s.M_set.push_back(i);
  for (int i = l; i <= 2 * l - 2; ++i) s.L_set.push_back(i);
  s.k = s.M_set;
  s.k.insert(s.k.end(), s.L_set.begin(), s.L_set.end());
  std::sort(s.k.begin(), s.k.end());
  return s;
}

TelescopingResult telescoping_product(int m, int l) {
  auto s = hypertangent_schedule(m, l);
  int M = m + l - 1;
  if (M - 1 < 5) throw std::invalid_argument("telescoping_product: need M - 1 >= 5");
  // positions 5..M-1 (1-based); a run k, k+1, ..., b of consecutive values gives (b+1)/k
  TelescopingResult r;
  r.value = 1;
  size_t i = 4;
  while (i < s.k.size()) {
    size_t j = i;
    while (j + 1 < s.k.size() && s.k[j + 1] == s.k[j] + 1) ++j;
    r.value *= Rational(s.k[j] + 1, s.k[i]);
    i = j + 1;
  }
  r.at_least_m_over_3 = r.value >= Rational(m, 3);
  if (l >= 4) {
    r.closed_form_name = "m(2l-1)/(5l)";
    r.closed_form = Rational(m * (2 * l - 1), 5 * l);
  } else if (l == 3) {
    r.closed_form_name = "3m/8";
    r.closed_form = Rational(3 * m, 8);
  } else {
    r.closed_form_name = "m/3";
    r.closed_form = Rational(m, 3);
  }
  r.closed_form_match = r.value == r.closed_form;
  return r;
}

LedgerAudit ledger_audit(const LedgerInputs& in) {
  if (in.m < 3 || in.n < 1) throw std::invalid_argument("ledger_audit: need m >= 3 and n >= 1");
  if (in.a < 0 || in.b < 0) throw std::invalid_argument("ledger_audit: multiplicities must be non-negative");
  for (const auto* o : {&in.mult_o_D, &in.excess, &in.mult_B_D})
    if (*o && **o < 0) throw std::invalid_argument("ledger_audit: multiplicities must be non-negative");
  LedgerAudit out;
  BigInt mf = factorial(in.m);
  out.deg_Y_m = 2 * BigInt(in.n) * mf;
  for (int i = 1; i <= in.m; ++i) out.mult_o_Y.push_back(Rational(factorial(i)) / 2 * in.a);
  out.lhs = (in.a + 2 * in.b) * Rational(mf);
  out.rhs = Rational(4 * BigInt(in.n) * mf);
  out.reduced_inequality = in.a + 2 * in.b <= 4 * in.n;
  out.consistent = out.reduced_inequality;
  if (in.mult_o_D && in.excess) {
    out.c2_holds = in.a == 2 * *in.mult_o_D + 2 * *in.excess;
    out.consistent = out.consistent && *out.c2_holds;
  }
  if (in.excess && in.mult_B_D) {
    out.c3_holds = in.b + *in.excess >= *in.mult_B_D;
    out.consistent = out.consistent && *out.c3_holds;
  }
  return out;
}

bool prop51_bound_check(const Rational& n, const Rational& nu, const Rational& multB) {
  if (n < 0 || nu < 0 || multB < 0) throw std::invalid_argument("prop51_bound_check: inputs must be non-negative");
  return nu + multB <= 2 * n;
}

bool CensusRow::pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

bool CensusTable::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass()) return false;
  return true;
}

CensusTable census_table(int M_lo, int M_hi) {
  if (M_lo < 6 || M_hi < M_lo) throw std::invalid_argument("census: need 6 <= M_lo <= M_hi");
  CensusTable t;
  t.M_lo = M_lo;
  t.M_hi = M_hi;
  for (int M = M_lo; M <= M_hi; ++M) {
    for (int m = 3; m <= M - 1; ++m) {
      int l = M + 1 - m;
      if (l < 2) continue;
      CensusRow r;
      r.M = M;
      r.m = m;
      r.l = l;
      BigInt twoM = 2 * M;
      if (m == 3) {
        r.e2 = binomial(3 * M - 8, M - 4);
        r.checks.emplace_back("e2 > 2M", *r.e2 > twoM);
      }
      r.lemma41 = lemma41_codim(l, M - 3);
      r.binom_M4 = binomial(M, 4);
      r.checks.emplace_back("C(2l+M-4,M-4) >= C(M,4)", r.lemma41 >= r.binom_M4);
      r.checks.emplace_back("C(M,4) > 2M", r.binom_M4 > twoM);
      r.quartic = quartic_reducibility_codim(M);
      r.checks.emplace_back("quartic > 2M", r.quartic > twoM);
      r.alpha_k_lo = (M + 1) / 2;
      r.alpha_k_hi = M - 2;
      for (int k = r.alpha_k_lo; k <= r.alpha_k_hi; ++k) {
        BigInt v = 2 * alpha(k) - alpha(k - 1);
        if (k == r.alpha_k_lo || v < r.alpha_min) {
          r.alpha_min = v;
          r.alpha_min_k = k;
        }
      }
      r.checks.emplace_back("2alpha_k - alpha_(k-1) >= 2M", r.alpha_min >= twoM);
      r.alpha_top = alpha(M - 2);
      r.checks.emplace_back("alpha_(M-2) >= 2M", r.alpha_top >= twoM);
      // degrees of lambda^2 - w2, q2, ..., qm
      r.prop41_degrees = {2};
      for (int d = 2; d <= m; ++d) r.prop41_degrees.push_back(d);
      int N = M - 2;
      if (m - 1 <= N - 1) {
        r.prop41 = prop41_bound(N, r.prop41_degrees);
        r.checks.emplace_back("prop41 > 2M-1", *r.prop41 > BigInt(2 * M - 1));
      }
      auto s = hypertangent_schedule(m, l);
      r.schedule_size = static_cast<int>(s.k.size());
      r.schedule_ordering = s.ordering_holds();
      r.checks.emplace_back("schedule size = M-1", r.schedule_size == M - 1);
      r.checks.emplace_back("codim Bs ordering", r.schedule_ordering);
      r.tele = telescoping_product(m, l);
      t.rows.push_back(std::move(r));
    }
  }
  return t;
}

namespace {

std::string str(const BigInt& z) { return z.str(); }

}  // namespace

Json census_to_json(const CensusTable& t) {
  Json j;
  j["format"] = "dcreg.census/1";
  j["M_range"] = {t.M_lo, t.M_hi};
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json x;
    x["M"] = r.M;
    x["m"] = r.m;
    x["l"] = r.l;
    x["e2"] = r.e2 ? Json(str(*r.e2)) : Json(nullptr);
    x["lemma41"] = str(r.lemma41);
    x["binom_M_4"] = str(r.binom_M4);
    x["quartic"] = str(r.quartic);
    x["alpha_k_range"] = {r.alpha_k_lo, r.alpha_k_hi};
    x["alpha_min"] = str(r.alpha_min);
    x["alpha_min_k"] = r.alpha_min_k;
    x["alpha_M_minus_2"] = str(r.alpha_top);
    x["prop41_degrees"] = r.prop41_degrees;
    x["prop41"] = r.prop41 ? Json(str(*r.prop41)) : Json(nullptr);
    if (!r.prop41) x["prop41_note"] = "n/a: k = m-1 exceeds N-1";
    x["schedule_size"] = r.schedule_size;
    x["schedule_ordering"] = r.schedule_ordering;
    Json tele;
    tele["value"] = to_string(r.tele.value);
    tele["at_least_m_over_3"] = r.tele.at_least_m_over_3;
    tele["closed_form"] = r.tele.closed_form_name;
    tele["closed_form_value"] = to_string(r.tele.closed_form);
    tele["closed_form_match"] = r.tele.closed_form_match;
    if (!r.tele.closed_form_match) tele["annotation"] = "closed-form mismatch";
    if (!r.tele.at_least_m_over_3) tele["annotation_m_over_3"] = "below m/3";
    x["telescoping"] = tele;
    Json checks = Json::object();
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    x["checks"] = checks;
    x["pass"] = r.pass();
    rows.push_back(std::move(x));
  }
  j["rows"] = std::move(rows);
  j["all_pass"] = t.all_pass();
  return j;
}

std::string census_to_text(const CensusTable& t) {
  std::vector<std::vector<std::string>> cells = {
      {"M", "m", "l", "e2", "lemma41", "quartic", "2a_k-a_k-1", "prop41", "telescoping", ">=m/3", "closed form", "status"}};
  for (const auto& r : t.rows) {
    std::vector<std::string> failed;
    for (const auto& [name, ok] : r.checks)
      if (!ok) failed.push_back(name);
    std::string status = failed.empty() ? "pass" : "FAIL:";
    for (const auto& f : failed) status += " [" + f + "]";
    cells.push_back({std::to_string(r.M), std::to_string(r.m), std::to_string(r.l), r.e2 ? str(*r.e2) : "-",
                     str(r.lemma41), str(r.quartic), str(r.alpha_min), r.prop41 ? str(*r.prop41) : "n/a",
                     to_string(r.tele.value), r.tele.at_least_m_over_3 ? "yes" : "no",
                     r.tele.closed_form_match ? "match" : "mismatch (" + r.tele.closed_form_name + " = " + to_string(r.tele.closed_form) + ")",
                     status});
  }
  std::vector<size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    for (size_t c = 0; c < row.size(); ++c) {
      os << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      if (c + 1 < row.size()) os << "  ";
    }
    os << '\n';
  }
  return os.str();
}

Json audit_to_json(const LedgerInputs& in, const LedgerAudit& a) {
  Json j;
  j["m"] = in.m;
  j["n"] = in.n;
  j["a"] = to_string(in.a);
  j["b"] = to_string(in.b);
  j["deg_Y_m"] = str(a.deg_Y_m);
  Json mults = Json::array();
  for (const auto& v : a.mult_o_Y) mults.push_back(to_string(v));
  j["mult_o_Y"] = mults;
  j["lhs"] = to_string(a.lhs);
  j["rhs"] = to_string(a.rhs);
  j["a_plus_2b_le_4n"] = a.reduced_inequality;
  if (a.c2_holds) j["c2"] = *a.c2_holds;
  if (a.c3_holds) j["c3"] = *a.c3_holds;
  j["status"] = a.consistent ? "consistent" : "contradictory";
  return j;
}

}  // namespace dcreg::census
