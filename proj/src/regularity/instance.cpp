#include "dcreg/regularity/instance.hpp"

#include <stdexcept>

#include "dcreg/core/poly_io.hpp"

namespace dcreg::regularity {

void validate_parameters(int M, int m, int l, uint64_t p, bool toy, std::vector<std::string>* warnings) {
  if (!toy) {
    if (m < 3) throw std::invalid_argument("m must be at least 3");
    if (l < 2) throw std::invalid_argument("l must be at least 2");
    if (m + l != M + 1) throw std::invalid_argument("parameters must satisfy m + l = M + 1");
    if (M < 6) throw std::invalid_argument("M must be at least 6 (use --toy for smaller cases)");
  } else {
    if (M < 3) throw std::invalid_argument("toy mode needs M >= 3");
    if (m < 2 || l < 1) throw std::invalid_argument("toy mode needs m >= 2 and l >= 1");
    if (warnings) {
      warnings->push_back("toy mode: results do not correspond to the strict parameter range");
      if (m + l != M + 1) warnings->push_back("toy mode: m + l != M + 1");
    }
  }
  if (M + 1 > kMaxVars) throw std::invalid_argument("too many variables");
  PrimeField F(p);  // rejects 2 and composites
  if (p <= static_cast<uint64_t>(2 * l))
    throw std::invalid_argument("p must exceed 2l so that the square-root coefficients are defined");
}

DoubleCoverInstance make_instance(int M, int m, int l, uint64_t p, bool toy, PolyFp f, PolyFp g) {
  DoubleCoverInstance inst;
  validate_parameters(M, m, l, p, toy, &inst.warnings);
  inst.M = M;
  inst.m = m;
  inst.l = l;
  inst.p = static_cast<uint32_t>(p);
  inst.toy = toy;
  inst.ring = f.ring();
  if (inst.ring->nvars() != M + 1 || !g.ring()->same_as(*inst.ring)) throw std::invalid_argument("instance ring must be z1..z_{M+1}");
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("f and g must be nonzero");
  if (f.degree() > m) throw std::invalid_argument("deg f exceeds m");
  if (g.degree() > 2 * l) throw std::invalid_argument("deg g exceeds 2l");
  inst.f = std::move(f);
  inst.g = std::move(g);
  return inst;
}

DoubleCoverInstance make_instance(int M, int m, int l, uint64_t p, bool toy, const std::string& f, const std::string& g) {
  validate_parameters(M, m, l, p, toy);
  auto ring = make_ring<Fp>(standard_names(M + 1), PrimeField(p));
  return make_instance(M, m, l, p, toy, parse_poly(ring, f), parse_poly(ring, g));
}

Json instance_to_json(const DoubleCoverInstance& inst, const std::vector<Point>& points) {
  Json j;
  j["format"] = "dcreg.instance/1";
  j["M"] = inst.M;
  j["m"] = inst.m;
  j["l"] = inst.l;
  j["p"] = inst.p;
  j["toy"] = inst.toy;
  j["f"] = to_string(inst.f);
  j["g"] = to_string(inst.g);
  j["points"] = Json::array();
  for (const auto& pt : points) j["points"].push_back(pt);
  return j;
}

DoubleCoverInstance instance_from_json(const Json& j, std::vector<Point>* points) {
  for (const char* key : {"M", "m", "l", "p", "f", "g"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("instance file lacks field '") + key + "'");
  bool toy = j.value("toy", false);
  auto inst = make_instance(j.at("M").get<int>(), j.at("m").get<int>(), j.at("l").get<int>(), j.at("p").get<uint64_t>(),
                            toy, j.at("f").get<std::string>(), j.at("g").get<std::string>());
  if (points) {
    points->clear();
    if (j.contains("points"))
      for (const auto& pt : j.at("points")) {
        Point q;
        for (const auto& x : pt) {
          int64_t v = x.get<int64_t>();
          q.push_back(inst.field()(v).v);
        }
        if (static_cast<int>(q.size()) != inst.nvars()) throw std::invalid_argument("point has wrong dimension");
        points->push_back(std::move(q));
      }
  }
  return inst;
}

std::vector<Fp> to_field(const DoubleCoverInstance& inst, const Point& pt) {
  if (static_cast<int>(pt.size()) != inst.nvars()) throw std::invalid_argument("point has wrong dimension");
  std::vector<Fp> out;
  for (uint32_t v : pt) out.push_back(inst.field().from_u64(v));
  return out;
}

}  // namespace dcreg::regularity
