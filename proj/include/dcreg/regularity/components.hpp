#pragma once

#include <string>
#include <vector>

#include "dcreg/macaulay/graded_ideal.hpp"
#include "dcreg/regularity/report.hpp"

namespace dcreg::regularity {

struct ComponentOptions {
  int d_cap = 12;
  int e_max = 4;
  int l = 2;
  uint64_t probe_seed = 0;
};

// Irreducibility (and reducedness) of the double cover y^2 = g over the cone
// V(gens). Off the branch (g(0) = 1) a split is detected by the square-root
// obstruction; on the branch (g(0) = 0) by the lowest component of g.
Outcome cover_component_outcome(const PolyFp& g, const std::vector<PolyFp>& gens, const ComponentOptions& opt,
                                Json& details);

// V(linear forms, quadric) sorted by the rank of the quadric on the linear space.
struct QuadricSection {
  enum class Kind { Irreducible, PairOfPlanes, DoublePlane, NotSplitOverFp, Unclassified };
  Kind kind = Kind::Unclassified;
  int rank = 0;
  // generators of each component in the original ring; for Irreducible the
  // linear forms together with the quadric
  std::vector<std::vector<PolyFp>> components;
};
QuadricSection classify_quadric_section(const std::vector<PolyFp>& linear, const PolyFp& quadric);
const char* to_string(QuadricSection::Kind k);

// Cover check for every component of a quadric section, plus multiplicity 3
// of each plane (the cubic term must not vanish on it).
Outcome quadric_section_outcome(const PolyFp& g, const std::vector<PolyFp>& linear, const PolyFp& quadric,
                                const PolyFp& cubic, const ComponentOptions& opt, Json& details);

std::vector<std::string> texts(const std::vector<PolyFp>& polys);

// drops zero polynomials
std::vector<PolyFp> nonzero(std::vector<PolyFp> polys);

}  // namespace dcreg::regularity
