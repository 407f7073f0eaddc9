#include "dcreg/cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "dcreg/census/census.hpp"
#include "dcreg/regularity/checks.hpp"
#include "dcreg/regularity/sampling.hpp"

namespace dcreg::cli {

using regularity::Json;

namespace {

struct Config {
  uint64_t seed = 1;
  int M = 6, m = 3, l = 4;
  uint64_t p = 32003;
  bool toy = false;
  bool no_header = false;
  std::string out;
  // gen
  std::vector<std::string> through_points, through_branch_points;
  int random_branch_points = 0, random_points = 0;
  // check
  std::string input;
  int points = 0;
  int lambda_samples = 20;
  int dcap = 12;
  int e_max = 4;
  int hyperplanes = 5;
  int threads = 1;
  // census
  int M_min = 6, M_max = 20;
  std::string format = "json";
  // audit
  int n = 1;
  std::string a = "0", b = "0";
  bool sweep = false;
  std::string half_steps = "8";
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const Config& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw InputError("cannot write " + c.out);
  f << text;
}

regularity::Point parse_point(const std::string& s, const PrimeField& F, int n) {
  regularity::Point pt;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      pt.push_back(F(std::stoll(tok)).v);
    } catch (const std::exception&) {
      throw InputError("bad coordinate '" + tok + "'");
    }
  }
  if (static_cast<int>(pt.size()) != n) throw InputError("point needs " + std::to_string(n) + " coordinates");
  return pt;
}

int cmd_gen(const Config& c, std::ostream& out) {
  regularity::validate_parameters(c.M, c.m, c.l, c.p, c.toy);
  PrimeField F(c.p);
  const int n = c.M + 1;
  using K = regularity::PointConstraint::Kind;
  std::vector<regularity::PointConstraint> cons;
  for (const auto& s : c.through_points) cons.push_back({parse_point(s, F, n), K::OffBranchUnit});
  for (const auto& s : c.through_branch_points) cons.push_back({parse_point(s, F, n), K::OnBranch});
  regularity::Rng rng(regularity::derive_seed(c.seed, 0x67656e));
  for (int i = 0; i < c.random_branch_points; ++i) cons.push_back({regularity::random_point(F, n, rng), K::OnBranch});
  for (int i = 0; i < c.random_points; ++i) cons.push_back({regularity::random_point(F, n, rng), K::OffBranchUnit});
  auto inst = regularity::random_instance(c.M, c.m, c.l, c.p, c.toy, c.seed, cons);
  std::vector<regularity::Point> pts;
  for (const auto& x : cons) pts.push_back(x.point);
  Json j = regularity::instance_to_json(inst, pts);
  j["seed"] = c.seed;
  write_output(c, j.dump(2) + "\n", out);
  return 0;
}

int cmd_check(const Config& c, std::ostream& out) {
  std::ifstream f(c.input);
  if (!f) throw InputError("cannot read instance file " + c.input);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const std::exception& ex) {
    throw InputError(std::string("instance file is not valid JSON: ") + ex.what());
  }
  std::vector<regularity::Point> pts;
  regularity::DoubleCoverInstance inst;
  try {
    inst = regularity::instance_from_json(j, &pts);
  } catch (const std::exception& ex) {
    throw InputError(ex.what());
  }
  if (c.points > 0) {
    auto extra = regularity::points_on_Q(inst, c.points, regularity::derive_seed(c.seed, 0x636865636b));
    pts.insert(pts.end(), extra.begin(), extra.end());
  }
  regularity::CheckOptions opt;
  opt.seed = c.seed;
  opt.lambda_samples = c.lambda_samples;
  opt.d_cap = c.dcap;
  opt.e_max = c.e_max;
  opt.hyperplanes = c.hyperplanes;
  opt.threads = c.threads;
  auto rep = regularity::run_full_report(inst, pts, opt);
  write_output(c, regularity::report_to_json(rep, !c.no_header).dump(2) + "\n", out);
  return regularity::exit_code(rep);
}

int cmd_census(const Config& c, std::ostream& out) {
  auto t = census::census_table(c.M_min, c.M_max);
  if (c.format == "text") {
    write_output(c, census::census_to_text(t), out);
  } else {
    Json j;
    if (!c.no_header) j["header"] = {{"tool", "dcreg"}, {"version", DCREG_VERSION}};
    Json body = census::census_to_json(t);
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    write_output(c, j.dump(2) + "\n", out);
  }
  return t.all_pass() ? 0 : 2;
}

int cmd_audit(const Config& c, std::ostream& out) {
  Json j;
  if (!c.no_header) j["header"] = {{"tool", "dcreg"}, {"version", DCREG_VERSION}};
  j["format"] = "dcreg.audit/1";
  if (!c.sweep) {
    census::LedgerInputs in;
    in.m = c.m;
    in.n = c.n;
    in.a = parse_rational(c.a);
    in.b = parse_rational(c.b);
    j["audit"] = census::audit_to_json(in, census::ledger_audit(in));
    j["prop51"] = {{"n", c.n}, {"nu", c.a}, {"multB", c.b},
                   {"holds", census::prop51_bound_check(c.n, in.a, in.b)}};
  } else {
    // grid in half steps: a, b, nu, multB in {0, 1/2, ..., H/2}
    int H = std::stoi(c.half_steps);
    if (H < 0) throw InputError("--half-steps must be non-negative");
    Json cells = Json::array(), p51 = Json::array();
    size_t consistent = 0, contradictory = 0, boundary_mismatch = 0;
    for (int ia = 0; ia <= H; ++ia)
      for (int ib = 0; ib <= H; ++ib) {
        census::LedgerInputs in;
        in.m = c.m;
        in.n = c.n;
        in.a = Rational(ia, 2);
        in.b = Rational(ib, 2);
        auto a = census::ledger_audit(in);
        (a.consistent ? consistent : contradictory)++;
        if (a.consistent != (in.a + 2 * in.b <= 4 * c.n)) ++boundary_mismatch;
        cells.push_back({to_string(in.a), to_string(in.b), a.consistent ? "consistent" : "contradictory"});
        bool holds = census::prop51_bound_check(c.n, in.a, in.b);
        p51.push_back({to_string(in.a), to_string(in.b), holds});
      }
    j["m"] = c.m;
    j["n"] = c.n;
    j["grid"] = "a, b in {0, 1/2, ..., " + to_string(Rational(H, 2)) + "}";
    j["ledger_cells"] = {{"columns", {"a", "b", "status"}}, {"rows", cells}};
    j["ledger_summary"] = {{"consistent", consistent}, {"contradictory", contradictory},
                           {"boundary", "a + 2b = " + std::to_string(4 * c.n)}, {"off_boundary_cells", boundary_mismatch}};
    j["prop51_cells"] = {{"columns", {"nu", "multB", "holds"}}, {"rows", p51}};
  }
  write_output(c, j.dump(2) + "\n", out);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Regularity tooling for Fano double covers", "dcreg"};
  app.require_subcommand(1);
  auto common = [&c](CLI::App* s) {
    s->add_option("--seed", c.seed, "master seed");
    s->add_option("--out", c.out, "output file (default stdout)");
    s->add_flag("--no-header", c.no_header, "omit the version header");
  };
  auto params = [&c](CLI::App* s) {
    s->add_option("--M", c.M, "dimension M");
    s->add_option("--m", c.m, "degree of Q");
    s->add_option("--l", c.l, "half degree of the branch divisor");
    s->add_option("--p", c.p, "prime modulus");
    s->add_flag("--toy", c.toy, "allow parameters outside the strict range");
  };
  auto* gen = app.add_subcommand("gen", "generate a random instance");
  common(gen);
  params(gen);
  gen->add_option("--through-point", c.through_points, "comma-separated point with f = 0, g = 1");
  gen->add_option("--through-branch-point", c.through_branch_points, "comma-separated point with f = g = 0");
  gen->add_option("--random-branch-points", c.random_branch_points, "number of random points planted on Q and W");
  gen->add_option("--random-points", c.random_points, "number of random points planted on Q off W");

  auto* check = app.add_subcommand("check", "check the regularity conditions");
  common(check);
  check->add_option("instance", c.input, "instance JSON file")->required();
  check->add_option("--points", c.points, "number of extra points sampled on Q");
  check->add_option("--lambda-samples", c.lambda_samples, "random linear forms per quantified condition");
  check->add_option("--dcap", c.dcap, "degree cap for Hilbert function certificates");
  check->add_option("--e-max", c.e_max, "saturation level");
  check->add_option("--hyperplanes", c.hyperplanes, "random hyperplane sections");
  check->add_option("--threads", c.threads, "worker threads");

  auto* census = app.add_subcommand("census", "tabulate the codimension bounds");
  common(census);
  census->add_option("--M-min", c.M_min, "smallest M");
  census->add_option("--M-max", c.M_max, "largest M");
  census->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* audit = app.add_subcommand("audit", "audit the multiplicity ledger");
  common(audit);
  audit->add_option("--m", c.m, "m");
  audit->add_option("--n", c.n, "n");
  audit->add_option("--a", c.a, "mult_o D_T (or nu)");
  audit->add_option("--b", c.b, "mult_B D_T^+ (or mult_B D^+)");
  audit->add_flag("--sweep", c.sweep, "sweep a, b over a half-step grid");
  audit->add_option("--half-steps", c.half_steps, "grid size in half steps");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    if (*gen) return cmd_gen(c, out);
    if (*check) return cmd_check(c, out);
    if (*census) return cmd_census(c, out);
    if (*audit) return cmd_audit(c, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace dcreg::cli
