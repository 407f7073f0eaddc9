#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "dcreg/core/sparse_poly.hpp"

namespace dcreg::regularity {

using Json = nlohmann::ordered_json;
using Point = std::vector<uint32_t>;

struct DoubleCoverInstance {
  int M = 0, m = 0, l = 0;
  uint32_t p = 0;
  bool toy = false;
  RingPtr<Fp> ring;  // z1..z_{M+1}
  PolyFp f, g;
  std::vector<std::string> warnings;

  int nvars() const { return M + 1; }
  const PrimeField& field() const { return ring->field(); }
};

// Validates parameters; strict mode enforces m >= 3, l >= 2, m + l = M + 1, M >= 6.
void validate_parameters(int M, int m, int l, uint64_t p, bool toy, std::vector<std::string>* warnings = nullptr);

DoubleCoverInstance make_instance(int M, int m, int l, uint64_t p, bool toy, const std::string& f, const std::string& g);
DoubleCoverInstance make_instance(int M, int m, int l, uint64_t p, bool toy, PolyFp f, PolyFp g);

Json instance_to_json(const DoubleCoverInstance& inst, const std::vector<Point>& points);
DoubleCoverInstance instance_from_json(const Json& j, std::vector<Point>* points);

std::vector<Fp> to_field(const DoubleCoverInstance& inst, const Point& pt);

}  // namespace dcreg::regularity
