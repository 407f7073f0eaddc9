#include "dcreg/regularity/components.hpp"

#include "dcreg/branch/obstruction.hpp"
#include "dcreg/core/poly_io.hpp"
#include "dcreg/core/quadratic_form.hpp"
#include "dcreg/macaulay/irreducibility.hpp"

namespace dcreg::regularity {

using macaulay::GradedIdeal;

std::vector<std::string> texts(const std::vector<PolyFp>& polys) {
  std::vector<std::string> out;
  for (const auto& P : polys) out.push_back(to_string(P));
  return out;
}

std::vector<PolyFp> nonzero(std::vector<PolyFp> polys) {
  std::vector<PolyFp> out;
  for (auto& P : polys)
    if (!P.is_zero()) out.push_back(std::move(P));
  return out;
}

const char* to_string(QuadricSection::Kind k) {
  switch (k) {
    case QuadricSection::Kind::Irreducible: return "irreducible";
    case QuadricSection::Kind::PairOfPlanes: return "pair-of-planes";
    case QuadricSection::Kind::DoublePlane: return "double-plane";
    case QuadricSection::Kind::NotSplitOverFp: return "pair-of-planes-not-rational";
    case QuadricSection::Kind::Unclassified: return "unclassified";
  }
  return "?";
}

Outcome cover_component_outcome(const PolyFp& g, const std::vector<PolyFp>& gens, const ComponentOptions& opt,
                                Json& details) {
  GradedIdeal I(g.ring(), nonzero(gens));
  details["ideal"] = texts(I.generators());
  auto cert = macaulay::certify_irreducible(I, opt.d_cap);
  Json irr;
  irr["certified"] = cert.certified;
  if (cert.certified) irr["method"] = cert.method;
  else irr["reason"] = cert.reason;
  irr["projective_dim"] = cert.projective_dim;
  if (cert.quadric_rank >= 0) irr["quadric_rank"] = cert.quadric_rank;
  if (cert.jacobian_zero_degree >= 0) irr["jacobian_zero_degree"] = cert.jacobian_zero_degree;
  details["irreducibility"] = irr;
  if (!cert.certified) {
    auto probe = macaulay::component_probe(I, opt.probe_seed);
    details["probe"] = {{"linear_dims", probe.linear_dims}, {"linear_structure_seen", probe.linear_structure_seen}};
    return Outcome::inconclusive(reason::kComponentProbe);
  }

  if (!g.constant_term().is_zero()) {
    auto so = branch::cover_split_obstruction(g, I, opt.l, opt.e_max);
    Json o;
    o["kind"] = branch::to_string(so.kind);
    o["tested"] = so.tested;
    if (so.witness >= 0) o["witness_index"] = so.witness;
    details["obstruction"] = o;
    if (so.kind == branch::SplitObstruction::Kind::IrreducibleCertified) return Outcome::pass();
    if (so.square_witness_verified)
      return Outcome::fail({{"type", "exact-square"},
                            {"ideal", texts(I.generators())},
                            {"square_root", to_string(so.square_root)},
                            {"saturation_level", so.saturation_level}});
    return Outcome::inconclusive(reason::kComponentProbe);
  }

  auto bo = branch::branch_vertex_obstruction(g, I, opt.e_max);
  Json o;
  o["kind"] = branch::to_string(bo.kind);
  if (bo.lowest_degree >= 0) o["lowest_degree"] = bo.lowest_degree;
  if (!bo.method.empty()) o["method"] = bo.method;
  if (bo.quadric_rank >= 0) o["quadric_rank"] = bo.quadric_rank;
  if (bo.pencil_degree >= 0) o["pencil_degree"] = bo.pencil_degree;
  details["obstruction"] = o;
  switch (bo.kind) {
    case branch::BranchObstruction::Kind::IrreducibleCertified: return Outcome::pass();
    case branch::BranchObstruction::Kind::ContainedInBranch:
      return Outcome::fail({{"type", "contained-in-branch"}, {"ideal", texts(I.generators())}});
    case branch::BranchObstruction::Kind::SplitNotExcluded: break;
  }
  return Outcome::inconclusive(reason::kComponentProbe);
}

QuadricSection classify_quadric_section(const std::vector<PolyFp>& linear, const PolyFp& quadric) {
  const auto& ring = quadric.ring();
  const auto& F = ring->field();
  auto lin = nonzero(linear);
  auto red = macaulay::reduce_linear(ring, lin);
  PolyFp q = red.reduce(quadric);
  QuadricSection out;
  out.rank = q.is_zero() ? 0 : quadratic_rank(q);
  if (out.rank >= 3) {
    out.kind = QuadricSection::Kind::Irreducible;
    auto gens = lin;
    gens.push_back(quadric);
    out.components.push_back(std::move(gens));
    return out;
  }
  if (out.rank == 0) return out;
  auto diag = QuadraticForm<Fp>::from_poly(q).diagonalize();
  std::vector<std::pair<Fp, std::vector<Fp>>> parts;
  for (size_t i = 0; i < diag.coef.size(); ++i)
    if (!diag.coef[i].is_zero()) parts.emplace_back(diag.coef[i], diag.forms[i]);
  auto lift = [&](const std::vector<Fp>& v) {
    PolyFp L(red.ring);
    for (size_t j = 0; j < v.size(); ++j) L += PolyFp::monomial(red.ring, Monomial::var(static_cast<int>(j)), v[j]);
    return rebase(L, ring);
  };
  if (out.rank == 1) {
    out.kind = QuadricSection::Kind::DoublePlane;
    auto gens = lin;
    gens.push_back(lift(parts[0].second));
    out.components.push_back(std::move(gens));
    return out;
  }
  // a u^2 + b v^2 = a (u - t v)(u + t v) with t^2 = -b/a
  Fp t;
  if (!F.sqrt(-(parts[1].first / parts[0].first), t)) {
    out.kind = QuadricSection::Kind::NotSplitOverFp;
    return out;
  }
  out.kind = QuadricSection::Kind::PairOfPlanes;
  for (Fp s : {t, -t}) {
    std::vector<Fp> v = parts[0].second;
    for (size_t j = 0; j < v.size(); ++j) v[j] += s * parts[1].second[j];
    auto gens = lin;
    gens.push_back(lift(v));
    out.components.push_back(std::move(gens));
  }
  return out;
}

Outcome quadric_section_outcome(const PolyFp& g, const std::vector<PolyFp>& linear, const PolyFp& quadric,
                                const PolyFp& cubic, const ComponentOptions& opt, Json& details) {
  auto sec = classify_quadric_section(linear, quadric);
  details["section"] = to_string(sec.kind);
  details["quadric_rank"] = sec.rank;
  if (sec.kind == QuadricSection::Kind::Unclassified) return Outcome::inconclusive(reason::kUnclassified);
  if (sec.kind == QuadricSection::Kind::NotSplitOverFp) return Outcome::inconclusive(reason::kComponentProbe);
  Outcome out;
  Json comps = Json::array();
  for (const auto& gens : sec.components) {
    Json cd;
    if (sec.kind != QuadricSection::Kind::Irreducible) {
      // the plane must meet Q with multiplicity exactly 3
      auto red = macaulay::reduce_linear(g.ring(), nonzero(gens));
      bool mult3 = !red.reduce(cubic).is_zero();
      cd["multiplicity_3"] = mult3;
      if (!mult3) {
        out.merge(Outcome::fail({{"type", "plane-multiplicity"}, {"plane", texts(nonzero(gens))}}));
        comps.push_back(std::move(cd));
        continue;
      }
    }
    out.merge(cover_component_outcome(g, gens, opt, cd));
    comps.push_back(std::move(cd));
  }
  details["components"] = std::move(comps);
  return out;
}

}  // namespace dcreg::regularity
