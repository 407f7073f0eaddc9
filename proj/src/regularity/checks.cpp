#include "dcreg/regularity/checks.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "dcreg/branch/sqrt_branch.hpp"
#include "dcreg/core/poly_io.hpp"
#include "dcreg/core/quadratic_form.hpp"
#include "dcreg/core/substitution.hpp"
#include "dcreg/macaulay/irreducibility.hpp"
#include "dcreg/macaulay/saturation.hpp"
#include "dcreg/regularity/components.hpp"
#include "dcreg/regularity/sampling.hpp"

namespace dcreg::regularity {

using macaulay::GradedIdeal;
using macaulay::SequenceCertificate;
using macaulay::SequenceVerdict;

namespace {

Outcome sequence_outcome(const SequenceCertificate& c) {
  switch (c.verdict) {
    case SequenceVerdict::Regular: return Outcome::pass();
    case SequenceVerdict::NotRegular: {
      int64_t actual = -1, expected = -1;
      for (const auto& [d, v] : c.hilbert.by_degree)
        if (d == c.defect_degree) actual = v;
      for (const auto& [d, v] : c.koszul_reference)
        if (d == c.defect_degree) expected = v;
      return Outcome::fail(
          {{"type", "defect-degree"}, {"degree", c.defect_degree}, {"hilbert", actual}, {"expected", expected}});
    }
    case SequenceVerdict::InconclusiveThrough: break;
  }
  return Outcome::inconclusive(c.anomaly ? reason::kAnomaly : reason::kDcap);
}

Outcome rank_outcome(const char* name, const PolyFp& form, int rank, int required) {
  if (rank >= required) return Outcome::pass();
  return Outcome::fail({{"type", "rank"}, {"form", name}, {"quadric", to_string(form)}, {"rank", rank}, {"required", required}});
}

Outcome lambda_wrap(const Outcome& o, const PolyFp& lambda) {
  if (o.verdict != Verdict::Fail) return o;
  return Outcome::fail({{"type", "lambda"}, {"lambda", to_string(lambda)}, {"inner", o.witness}});
}

PolyFp var(const RingPtr<Fp>& ring, int i) { return PolyFp::variable(ring, i); }

// restriction to the coordinate subspace where the given variables vanish
LinearSubstitution<Fp> coordinate_restriction(const RingPtr<Fp>& ring, const std::vector<int>& vars) {
  LinearSubstitution<Fp>::Assignments as;
  for (int v : vars) as.emplace_back(ring->name(v), PolyFp(ring));
  return LinearSubstitution<Fp>::eliminating(ring, as);
}

std::string scope_text(int samples, size_t total) {
  return "sampled: " + std::to_string(samples) + "+" + std::to_string(total - samples) + " deterministic";
}

// nonempty saturated linear part beyond `expected` (rows) -> Fail witness
Outcome linear_part_outcome(const macaulay::SaturatedLinearPart& L, const Matrix<Fp>& expected, const RingPtr<Fp>& ring,
                            Json& cert) {
  cert["dims"] = L.dims;
  cert["level"] = L.level;
  cert["stabilized"] = L.stabilized;
  int base = expected.empty() ? 0 : matrix_rank(expected);
  for (const auto& row : L.basis) {
    Matrix<Fp> A = expected;
    A.push_back(row);
    if (matrix_rank(A) > base)
      return Outcome::fail({{"type", "linear-form"}, {"form", to_string(macaulay::linear_form(ring, row))}, {"level", L.level}});
  }
  if (!L.stabilized) return Outcome::inconclusive(reason::kSaturation);
  return Outcome::pass();
}

Outcome irreducible_outcome(const GradedIdeal& I, int d_cap, uint64_t probe_seed, Json& cert) {
  auto c = macaulay::certify_irreducible(I, d_cap);
  cert["certified"] = c.certified;
  if (c.certified) {
    cert["method"] = c.method;
    return Outcome::pass();
  }
  cert["reason"] = c.reason;
  auto probe = macaulay::component_probe(I, probe_seed);
  cert["probe"] = {{"linear_dims", probe.linear_dims}, {"linear_structure_seen", probe.linear_structure_seen}};
  return Outcome::inconclusive(reason::kComponentProbe);
}

}  // namespace

std::vector<LambdaSample> lambda_list(const RingPtr<Fp>& ring, bool include_zero, int samples, uint64_t seed) {
  std::vector<LambdaSample> out;
  if (include_zero) out.push_back({"zero", PolyFp(ring)});
  PolyFp ones(ring);
  for (int i = 0; i < ring->nvars(); ++i) {
    out.push_back({"coordinate", var(ring, i)});
    ones += var(ring, i);
  }
  out.push_back({"all-ones", ones});
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) out.push_back({"random", random_linear_form(ring, rng, !include_zero)});
  return out;
}

std::vector<ConditionEntry> check_outside_branch(const DoubleCoverInstance& inst, const PointContext& ctx,
                                                 const CheckOptions& opt, uint64_t seed) {
  if (ctx.branch != BranchFlag::OutsideBranch || ctx.singular != SingularFlag::Smooth)
    throw std::invalid_argument("check_outside_branch needs a smooth point outside the branch divisor");
  const int n = inst.nvars(), m = inst.m, l = inst.l;
  const auto& ring = inst.ring;
  std::vector<PolyFp> q(std::max(m, 3) + 1, PolyFp(ring));
  for (int i = 1; i <= m; ++i) q[i] = ctx.f.homogeneous_component(i);
  auto ex = branch::expand_sqrt(ctx.g, 2 * l);
  ComponentOptions copt{opt.d_cap, opt.e_max, l, derive_seed(seed, 0x70726f6265)};
  std::vector<ConditionEntry> out;

  {
    ConditionEntry e;
    e.id = "R1.1";
    std::vector<PolyFp> polys;
    std::vector<int> degs;
    for (int i = 1; i <= m; ++i) polys.push_back(q[i]), degs.push_back(i);
    for (int k = l + 1; k <= 2 * l - 1; ++k) polys.push_back(ex.h(k)), degs.push_back(k);
    if (static_cast<int>(polys.size()) > n) {
      e.outcome = Outcome::inconclusive(reason::kUnclassified);
      e.certificates["note"] = "more forms than variables";
    } else {
      auto c = macaulay::regular_sequence_certificate(ring, polys, degs, opt.d_cap);
      e.certificates["sequence"] = certificate_json(c);
      e.outcome = sequence_outcome(c);
    }
    out.push_back(std::move(e));
  }

  {
    ConditionEntry e;
    e.id = "R1.2";
    GradedIdeal I(ring, nonzero({q[1], q[2], q[3]}));
    auto L = macaulay::saturated_linear_forms(I, opt.e_max);
    Json lin, irr;
    e.outcome = linear_part_outcome(L, {linear_coefficients(q[1])}, ring, lin);
    e.certificates["linear_part"] = lin;
    if (e.outcome.verdict == Verdict::Pass) {
      e.outcome = irreducible_outcome(I, opt.d_cap, copt.probe_seed, irr);
      e.certificates["irreducibility"] = irr;
    }
    out.push_back(std::move(e));
  }

  {
    ConditionEntry e;
    e.id = "R1.3";
    Rng rng(derive_seed(seed, 0x6879706572));
    std::vector<LambdaSample> planes;
    if (m <= 3) planes.push_back({"tangent", q[1]});
    for (int s = 0; s < opt.hyperplanes; ++s) {
      for (;;) {
        PolyFp L = random_linear_form(ring, rng, true);
        Matrix<Fp> A = {linear_coefficients(q[1]), linear_coefficients(L)};
        if (matrix_rank(A) == 2) {
          planes.push_back({"random", L});
          break;
        }
      }
    }
    int idx = 0;
    if (m >= 4) {
      // the whole set {q1 = q2 = 0}, seen through its tangent cone
      LambdaEntry le;
      le.index = idx++;
      le.kind = "cone";
      le.form = "0";
      Json d;
      auto sec = classify_quadric_section({q[1]}, q[2]);
      d["section"] = to_string(sec.kind);
      d["quadric_rank"] = sec.rank;
      if (sec.kind == QuadricSection::Kind::Irreducible) le.outcome = cover_component_outcome(ctx.g, sec.components[0], copt, d);
      else le.outcome = Outcome::inconclusive(reason::kUnclassified);
      le.details = d;
      e.outcome.merge(le.outcome);
      e.lambdas.push_back(std::move(le));
    }
    for (const auto& P : planes) {
      LambdaEntry le;
      le.index = idx++;
      le.kind = P.kind;
      le.form = to_string(P.form);
      Json d;
      if (m <= 3) {
        std::vector<PolyFp> gens = {q[1], q[2], q[3]};
        if (P.kind != "tangent") gens.push_back(P.form);
        le.outcome = cover_component_outcome(ctx.g, gens, copt, d);
      } else {
        le.outcome = quadric_section_outcome(ctx.g, {q[1], P.form}, q[2], q[3], copt, d);
      }
      if (le.outcome.verdict == Verdict::Fail)
        le.outcome.witness = {{"type", le.outcome.witness.value("type", "")}, {"hyperplane", le.form}, {"inner", le.outcome.witness}};
      le.details = d;
      e.outcome.merge(le.outcome);
      e.lambdas.push_back(std::move(le));
    }
    e.scope = "hyperplanes: " + std::to_string(opt.hyperplanes) + " random" + (m <= 3 ? " + tangent" : " + cone");
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ConditionEntry> check_on_branch(const DoubleCoverInstance& inst, const PointContext& ctx,
                                            const CheckOptions& opt, uint64_t seed) {
  if (ctx.branch != BranchFlag::OnBranch || ctx.singular != SingularFlag::Smooth)
    throw std::invalid_argument("check_on_branch needs a smooth point on the branch divisor");
  const int n = inst.nvars(), m = inst.m;
  const auto& ring = inst.ring;
  auto bar = coordinate_restriction(ring, {0, n - 1});
  const auto& bring = bar.target();
  std::vector<PolyFp> q(std::max(m, 3) + 1, PolyFp(ring)), qb(std::max(m, 3) + 1, PolyFp(bring));
  for (int i = 1; i <= m; ++i) {
    q[i] = ctx.f.homogeneous_component(i);
    qb[i] = bar.apply(q[i]);
  }
  PolyFp w2b = bar.apply(ctx.g.homogeneous_component(2));
  auto lambdas = lambda_list(bring, true, opt.lambda_samples, derive_seed(seed, 0x6c616d));
  ComponentOptions copt{opt.d_cap, opt.e_max, inst.l, derive_seed(seed, 0x70726f6265)};
  std::vector<ConditionEntry> out;

  {
    ConditionEntry e;
    e.id = "R2.1";
    int rw = w2b.is_zero() ? 0 : quadratic_rank(w2b);
    int rq = qb[2].is_zero() ? 0 : quadratic_rank(qb[2]);
    e.certificates["rank_w2bar"] = rw;
    e.certificates["rank_q2bar"] = rq;
    // toy instances can have fewer variables than the thresholds
    int need_w = 4, need_q = 3;
    if (inst.toy) need_w = std::min(need_w, bring->nvars()), need_q = std::min(need_q, bring->nvars());
    e.outcome.merge(rank_outcome("w2bar", w2b, rw, need_w));
    e.outcome.merge(rank_outcome("q2bar", qb[2], rq, need_q));
    for (size_t i = 0; i < lambdas.size(); ++i) {
      const auto& L = lambdas[i];
      std::vector<PolyFp> polys = {L.form * L.form - w2b};
      std::vector<int> degs = {2};
      for (int j = 2; j <= m; ++j) polys.push_back(qb[j]), degs.push_back(j);
      auto c = macaulay::regular_sequence_certificate(bring, polys, degs, opt.d_cap);
      LambdaEntry le{static_cast<int>(i), L.kind, to_string(L.form), lambda_wrap(sequence_outcome(c), L.form),
                     certificate_json(c)};
      e.outcome.merge(le.outcome);
      e.lambdas.push_back(std::move(le));
    }
    e.scope = scope_text(opt.lambda_samples, lambdas.size());
    out.push_back(std::move(e));
  }

  {
    ConditionEntry e;
    e.id = "R2.2";
    GradedIdeal I(bring, nonzero({qb[2], qb[3]}));
    auto L = macaulay::saturated_linear_forms(I, opt.e_max);
    Json lin, irr;
    e.outcome = linear_part_outcome(L, {}, bring, lin);
    e.certificates["linear_part"] = lin;
    if (e.outcome.verdict == Verdict::Pass) {
      e.outcome = irreducible_outcome(I, opt.d_cap, copt.probe_seed, irr);
      e.certificates["irreducibility"] = irr;
    }
    out.push_back(std::move(e));
  }

  {
    ConditionEntry e;
    e.id = "R2.3";
    for (size_t i = 0; i < lambdas.size(); ++i) {
      const auto& L = lambdas[i];
      PolyFp lam = rebase(L.form, ring);
      std::vector<PolyFp> linear = {lam, var(ring, 0), var(ring, n - 1)};
      Json d;
      Outcome o;
      if (m <= 3) {
        auto gens = linear;
        gens.push_back(q[2]);
        gens.push_back(q[3]);
        o = cover_component_outcome(ctx.g, gens, copt, d);
      } else {
        o = quadric_section_outcome(ctx.g, linear, q[2], q[3], copt, d);
      }
      LambdaEntry le{static_cast<int>(i), L.kind, to_string(L.form), lambda_wrap(o, L.form), d};
      e.outcome.merge(le.outcome);
      e.lambdas.push_back(std::move(le));
    }
    e.scope = scope_text(opt.lambda_samples, lambdas.size());
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ConditionEntry> check_fiber_singularity(const DoubleCoverInstance& inst, const PointContext& ctx,
                                                    const CheckOptions& opt, uint64_t seed) {
  if (ctx.singular == SingularFlag::Smooth) throw std::invalid_argument("check_fiber_singularity needs a singular point");
  const int n = inst.nvars(), m = inst.m, l = inst.l;
  const auto& ring = inst.ring;
  std::vector<PolyFp> q(std::max(m, 3) + 1, PolyFp(ring));
  for (int i = 1; i <= m; ++i) q[i] = ctx.f.homogeneous_component(i);
  ComponentOptions copt{opt.d_cap, opt.e_max, l, derive_seed(seed, 0x70726f6265)};
  ConditionEntry e;

  if (ctx.singular == SingularFlag::Type1) {
    e.id = "R1.4";
    auto ex = branch::expand_sqrt(ctx.g, 2 * l);
    bool long_branch = m > 2 * l;
    e.certificates["sequence_shape"] = long_branch ? "lambda,q2..q(m-1),h(l+1)..h(2l)" : "lambda,q2..qm,h(l+1)..h(2l-1)";
    e.certificates["uses_h2l"] = long_branch;
    auto lambdas = lambda_list(ring, false, opt.lambda_samples, derive_seed(seed, 0x6c616d));
    for (size_t i = 0; i < lambdas.size(); ++i) {
      const auto& L = lambdas[i];
      std::vector<PolyFp> polys = {L.form};
      std::vector<int> degs = {1};
      int last_q = long_branch ? m - 1 : m, last_h = long_branch ? 2 * l : 2 * l - 1;
      for (int j = 2; j <= last_q; ++j) polys.push_back(q[j]), degs.push_back(j);
      for (int k = l + 1; k <= last_h; ++k) polys.push_back(ex.h(k)), degs.push_back(k);
      Json d;
      Outcome o;
      if (static_cast<int>(polys.size()) > n) {
        o = Outcome::inconclusive(reason::kUnclassified);
      } else {
        auto c = macaulay::regular_sequence_certificate(ring, polys, degs, opt.d_cap);
        d["sequence"] = certificate_json(c);
        o = sequence_outcome(c);
      }
      Json cd;
      auto sec = classify_quadric_section({L.form}, q[2]);
      cd["section"] = to_string(sec.kind);
      cd["quadric_rank"] = sec.rank;
      if (sec.kind == QuadricSection::Kind::Irreducible) o.merge(cover_component_outcome(ctx.g, sec.components[0], copt, cd));
      else o.merge(Outcome::inconclusive(reason::kUnclassified));
      d["component"] = cd;
      LambdaEntry le{static_cast<int>(i), L.kind, to_string(L.form), lambda_wrap(o, L.form), d};
      e.outcome.merge(le.outcome);
      e.lambdas.push_back(std::move(le));
    }
    e.scope = scope_text(opt.lambda_samples, lambdas.size());
    return {e};
  }

  e.id = "R2.4";
  auto bar = coordinate_restriction(ring, {n - 1});
  const auto& bring = bar.target();
  std::vector<PolyFp> qb(std::max(m, 3) + 1, PolyFp(bring));
  for (int i = 1; i <= m; ++i) qb[i] = bar.apply(q[i]);
  PolyFp w2b = bar.apply(ctx.g.homogeneous_component(2));
  int full = bring->nvars();
  int rw = w2b.is_zero() ? 0 : quadratic_rank(w2b);
  int rq = qb[2].is_zero() ? 0 : quadratic_rank(qb[2]);
  e.certificates["rank_w2bar"] = rw;
  e.certificates["rank_q2bar"] = rq;
  e.outcome.merge(rank_outcome("w2bar", w2b, rw, full));
  e.outcome.merge(rank_outcome("q2bar", qb[2], rq, full));

  GradedIdeal I(bring, nonzero({qb[2], qb[3]}));
  auto Lp = macaulay::saturated_linear_forms(I, opt.e_max);
  Json lin, irr;
  Outcome span = linear_part_outcome(Lp, {}, bring, lin);
  if (span.verdict == Verdict::Pass) span = irreducible_outcome(I, opt.d_cap, copt.probe_seed, irr);
  e.certificates["linear_part"] = lin;
  if (!irr.is_null()) e.certificates["irreducibility"] = irr;
  e.outcome.merge(span);

  auto lambdas = lambda_list(bring, true, opt.lambda_samples, derive_seed(seed, 0x6c616d));
  for (size_t i = 0; i < lambdas.size(); ++i) {
    const auto& L = lambdas[i];
    std::vector<PolyFp> polys = {L.form * L.form - w2b};
    std::vector<int> degs = {2};
    for (int j = 2; j <= m; ++j) polys.push_back(qb[j]), degs.push_back(j);
    auto c = macaulay::regular_sequence_certificate(bring, polys, degs, opt.d_cap);
    Json d;
    d["sequence"] = certificate_json(c);
    Outcome o = sequence_outcome(c);
    PolyFp lam = rebase(L.form, ring);
    Json cd;
    auto sec = classify_quadric_section({lam, var(ring, n - 1)}, q[2]);
    cd["section"] = to_string(sec.kind);
    cd["quadric_rank"] = sec.rank;
    if (sec.kind == QuadricSection::Kind::Irreducible) o.merge(cover_component_outcome(ctx.g, sec.components[0], copt, cd));
    else o.merge(Outcome::inconclusive(reason::kUnclassified));
    d["component"] = cd;
    LambdaEntry le{static_cast<int>(i), L.kind, to_string(L.form), lambda_wrap(o, L.form), d};
    e.outcome.merge(le.outcome);
    e.lambdas.push_back(std::move(le));
  }
  e.scope = scope_text(opt.lambda_samples, lambdas.size());
  return {e};
}

PointReport check_point(const DoubleCoverInstance& inst, const Point& pt, size_t index, const CheckOptions& opt) {
  PointReport r;
  r.index = index;
  r.point = pt;
  uint64_t seed = derive_seed(opt.seed, 0x7074, index);
  try {
    auto ctx = classify_point(inst, pt);
    r.branch = to_string(ctx.branch);
    r.singular = to_string(ctx.singular);
    if (ctx.singular != SingularFlag::Smooth) r.conditions = check_fiber_singularity(inst, ctx, opt, seed);
    else if (ctx.branch == BranchFlag::OutsideBranch) r.conditions = check_outside_branch(inst, ctx, opt, seed);
    else r.conditions = check_on_branch(inst, ctx, opt, seed);
  } catch (const std::exception& ex) {
    r.error = ex.what();
    r.conditions.clear();
  }
  return r;
}

RegularityReport run_full_report(const DoubleCoverInstance& inst, const std::vector<Point>& points, const CheckOptions& opt) {
  RegularityReport rep;
  rep.seed = opt.seed;
  rep.toy = inst.toy;
  rep.warnings = inst.warnings;
  rep.instance = instance_to_json(inst, points);
  rep.points.resize(points.size());
  int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(points.size())));
  if (threads <= 1) {
    for (size_t i = 0; i < points.size(); ++i) rep.points[i] = check_point(inst, points[i], i, opt);
    return rep;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (size_t i; (i = next.fetch_add(1)) < points.size();) rep.points[i] = check_point(inst, points[i], i, opt);
    });
  for (auto& th : pool) th.join();
  return rep;
}

}  // namespace dcreg::regularity
