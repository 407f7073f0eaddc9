#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcreg/macaulay/hilbert.hpp"
#include "dcreg/regularity/instance.hpp"

namespace dcreg::regularity {

enum class Verdict { Pass = 0, Inconclusive = 1, Fail = 2 };
const char* to_string(Verdict v);

// Reason codes attached to Inconclusive verdicts.
namespace reason {
inline constexpr const char* kDcap = "dcap";
inline constexpr const char* kComponentProbe = "component-probe";
inline constexpr const char* kAnomaly = "anomaly";
inline constexpr const char* kSaturation = "saturation";
inline constexpr const char* kUnclassified = "unclassified";
inline constexpr const char* kPointError = "point-error";
}  // namespace reason

// A verdict with its reason (Inconclusive) or witness (Fail). Combining keeps
// the worst verdict and the first reason/witness seen at that level.
struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string reason;
  Json witness;

  static Outcome pass() { return {}; }
  static Outcome inconclusive(std::string why) { return {Verdict::Inconclusive, std::move(why), Json()}; }
  static Outcome fail(Json w) { return {Verdict::Fail, "", std::move(w)}; }
  void merge(const Outcome& o);
};

struct LambdaEntry {
  int index = 0;
  std::string kind;  // "zero", "coordinate", "all-ones", "random"
  std::string form;
  Outcome outcome;
  Json details;
};

struct ConditionEntry {
  std::string id;  // "R1.1", ...
  Outcome outcome;
  std::string scope;  // e.g. "sampled: 10+7"
  Json certificates = Json::object();
  std::vector<LambdaEntry> lambdas;
};

struct PointReport {
  size_t index = 0;
  Point point;
  std::string branch, singular;
  std::string error;
  std::vector<ConditionEntry> conditions;
  Verdict verdict() const;
};

struct RegularityReport {
  uint64_t seed = 0;
  bool toy = false;
  Json instance;
  std::vector<std::string> warnings;
  std::vector<PointReport> points;
  Verdict overall() const;
};

Json certificate_json(const macaulay::SequenceCertificate& c);
Json report_to_json(const RegularityReport& r, bool header);

// 0 no Fail and no Inconclusive, 2 any Fail, 3 only Inconclusive blemishes
int exit_code(const RegularityReport& r);

}  // namespace dcreg::regularity
