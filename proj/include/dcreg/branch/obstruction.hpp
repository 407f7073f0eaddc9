#pragma once

#include <string>
#include <vector>

#include "dcreg/branch/sqrt_branch.hpp"
#include "dcreg/macaulay/graded_ideal.hpp"

namespace dcreg::branch {

// Off the branch divisor (g(0) = 1): the double cover of the cone V(I) splits
// exactly when g is a square modulo the ideal, and a square root then agrees
// with [sqrt g]_l. We therefore test h_{l+1}, ..., h_{2l}.
struct SplitObstruction {
  enum class Kind { IrreducibleCertified, SplitNotExcluded };
  Kind kind = Kind::SplitNotExcluded;
  int witness = -1;              // k with h_k outside the saturation
  std::vector<int> tested;       // indices k tested, in order
  int saturation_level = 4;
  bool square_witness_verified = false;  // g - s^2 lies in the saturation, s = [sqrt g]_l
  PolyFp square_root;
};

SplitObstruction cover_split_obstruction(const PolyFp& g, const macaulay::GradedIdeal& I, int l, int e = 4);

// On the branch divisor (g(0) = 0). A square modulo a graded domain has even
// lowest degree, and in degree 2 it is the square of a linear form.
struct BranchObstruction {
  enum class Kind { IrreducibleCertified, ContainedInBranch, SplitNotExcluded };
  Kind kind = Kind::SplitNotExcluded;
  int lowest_degree = -1;        // lowest k with g_k outside the saturation
  std::string method;            // "odd-degree", "rank", "pencil"
  int quadric_rank = -1;
  int pencil_degree = -1;
  int quadrics_in_ideal = -1;
};

BranchObstruction branch_vertex_obstruction(const PolyFp& g, const macaulay::GradedIdeal& I, int e = 4);

const char* to_string(SplitObstruction::Kind k);
const char* to_string(BranchObstruction::Kind k);

}  // namespace dcreg::branch
