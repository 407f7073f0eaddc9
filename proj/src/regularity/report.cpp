#include "dcreg/regularity/report.hpp"

#include <chrono>
#include <ctime>

namespace dcreg::regularity {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "Pass";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::Fail: return "Fail";
  }
  return "?";
}

void Outcome::merge(const Outcome& o) {
  if (o.verdict > verdict) *this = o;
}

Verdict PointReport::verdict() const {
  Verdict v = error.empty() ? Verdict::Pass : Verdict::Inconclusive;
  for (const auto& c : conditions) v = std::max(v, c.outcome.verdict);
  return v;
}

Verdict RegularityReport::overall() const {
  Verdict v = Verdict::Pass;
  for (const auto& p : points) v = std::max(v, p.verdict());
  return v;
}

Json certificate_json(const macaulay::SequenceCertificate& c) {
  Json j;
  j["verdict"] = c.verdict_string();
  j["degrees"] = c.degrees;
  j["variables"] = c.n_amb;
  j["through"] = c.through;
  j["cap"] = c.cap;
  j["stabilization_bound"] = c.stabilization_bound;
  if (c.defect_degree >= 0) j["defect_degree"] = c.defect_degree;
  if (c.anomaly) j["anomaly_degree"] = c.anomaly_degree;
  Json h = Json::array(), k = Json::array();
  for (const auto& [d, v] : c.hilbert.by_degree) h.push_back(v);
  for (const auto& [d, v] : c.koszul_reference) k.push_back(v);
  j["hilbert"] = h;
  j["koszul"] = k;
  return j;
}

namespace {

Json outcome_fields(Json j, const Outcome& o) {
  j["verdict"] = to_string(o.verdict);
  if (o.verdict == Verdict::Inconclusive) j["reason"] = o.reason;
  if (o.verdict == Verdict::Fail) j["witness"] = o.witness;
  return j;
}

}  // namespace

Json report_to_json(const RegularityReport& r, bool header) {
  Json j;
  if (header) {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    j["header"] = {{"tool", "dcreg"}, {"version", DCREG_VERSION}, {"generated_at", buf}};
  }
  j["format"] = "dcreg.report/1";
  j["seed"] = r.seed;
  if (r.toy) j["watermark"] = "TOY MODE: parameters outside the strict range";
  j["warnings"] = r.warnings;
  j["instance"] = r.instance;
  Json pts = Json::array();
  size_t counts[3] = {0, 0, 0};
  for (const auto& p : r.points) {
    Json pj;
    pj["index"] = p.index;
    pj["point"] = p.point;
    pj["branch"] = p.branch;
    pj["singular"] = p.singular;
    if (!p.error.empty()) pj["error"] = p.error;
    Json conds = Json::array();
    for (const auto& c : p.conditions) {
      ++counts[static_cast<int>(c.outcome.verdict)];
      Json cj;
      cj["id"] = c.id;
      cj = outcome_fields(std::move(cj), c.outcome);
      if (!c.scope.empty()) cj["scope"] = c.scope;
      cj["certificates"] = c.certificates;
      if (!c.lambdas.empty()) {
        Json ls = Json::array();
        for (const auto& L : c.lambdas) {
          Json lj;
          lj["index"] = L.index;
          lj["kind"] = L.kind;
          lj["lambda"] = L.form;
          lj = outcome_fields(std::move(lj), L.outcome);
          if (!L.details.is_null()) lj["details"] = L.details;
          ls.push_back(std::move(lj));
        }
        cj["lambdas"] = std::move(ls);
      }
      conds.push_back(std::move(cj));
    }
    pj["conditions"] = std::move(conds);
    pj["verdict"] = to_string(p.verdict());
    pts.push_back(std::move(pj));
  }
  j["points"] = std::move(pts);
  size_t errors = 0;
  for (const auto& p : r.points) errors += !p.error.empty();
  j["summary"] = {{"points", r.points.size()},
                  {"pass", counts[0]},
                  {"inconclusive", counts[1]},
                  {"fail", counts[2]},
                  {"point_errors", errors},
                  {"overall", to_string(r.overall())}};
  return j;
}

int exit_code(const RegularityReport& r) {
  switch (r.overall()) {
    case Verdict::Pass: return 0;
    case Verdict::Fail: return 2;
    case Verdict::Inconclusive: return 3;
  }
  return 3;
}

}  // namespace dcreg::regularity
