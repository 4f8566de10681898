// galrep: projective unitary representations of the Galilei group in 2+1 and
// 3+1 dimensions: orbit classification and property-based verification of the
// cocycle-induced systems of imprimitivity.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "galrep/verify.hpp"

using namespace galrep;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kReportVersion = "1";

ordered_json report_to_json(const std::vector<CaseReport>& reports) {
  ordered_json doc;
  doc["version"] = kReportVersion;
  doc["cases"] = ordered_json::array();
  for (const auto& rep : reports) {
    ordered_json jc;
    jc["name"] = rep.name;
    ordered_json jp;
    for (const auto& [k, v] : rep.params) jp[k] = v;
    jc["params"] = jp;
    jc["checks"] = ordered_json::array();
    for (const auto& c : rep.checks) {
      ordered_json jk;
      jk["name"] = c.name;
      jk["residual"] = c.residual;
      jk["tol"] = c.tol;
      jk["pass"] = c.pass;
      jc["checks"].push_back(jk);
    }
    jc["pass"] = rep.pass;
    doc["cases"].push_back(jc);
  }
  return doc;
}

void print_report_text(const CaseReport& rep) {
  std::printf("case %s (", rep.name.c_str());
  for (size_t i = 0; i < rep.params.size(); ++i)
    std::printf("%s%s=%g", i ? ", " : "", rep.params[i].first.c_str(), rep.params[i].second);
  std::printf(")\n");
  for (const auto& c : rep.checks)
    std::printf("  %-24s residual %.3e  tol %.1e  %s\n", c.name.c_str(), c.residual, c.tol,
                c.pass ? "pass" : "FAIL");
  std::printf("  => %s  [%.0f ms]\n", rep.pass ? "PASS" : "FAIL", rep.elapsed_ms);
}

struct StabilizerInfo {
  std::string stabilizer;
  std::string menu;
};

StabilizerInfo describe(const OrbitClass2& o) {
  switch (o.family) {
    case OrbitFamily::Z1:
      return {"rotation line {(x, 0) | x in R} ~ R", "s in R"};
    case OrbitFamily::Z2:
      return {"trivial {e}", "trivial stabilizer character; V indexed by (tau, F, S)"};
    case OrbitFamily::Z3:
      return {"{(n, alpha)} ~ Z x R", "(s, t) with s in [0, 1), t in R"};
    case OrbitFamily::Z4:
      return {"full group G", "m_F-representations of G"};
    case OrbitFamily::Z5: {
      if (o.invariant == 0) return {"boosts {(0, v)} ~ R^2", "CCR (Schrodinger), for F != 0"};
      const double k = kTwoPi * o.params.F * o.params.S / o.invariant;
      if (k == 0) return {"{(n, alpha)} ~ Z x R", "(s, t) with s in [0, 1), t in R"};
      return {"{(n, alpha)} ~ Z x R", "lambda in [0, 1)  (k = 2 pi F S / r != 0)"};
    }
  }
  return {};
}

int cmd_classify(int dim, double tau, double F, double S, double p0,
                 const std::vector<double>& p, bool as_json) {
  if (dim == 3) {
    if (tau == 0) {
      std::fprintf(stderr, "error: dim=3 requires tau != 0\n");
      return 2;
    }
    if (p.size() != 3) {
      std::fprintf(stderr, "error: dim=3 requires --p with 3 components\n");
      return 2;
    }
    const MomentumPoint3 pt{p0, {p[0], p[1], p[2]}};
    const double rho = rho_invariant(tau, pt);
    const MomentumPoint3 base = base_point3(tau, rho);
    if (as_json) {
      ordered_json j;
      j["dim"] = 3;
      j["family"] = "Z_rho";
      j["invariant"] = {{"name", "rho"}, {"value", rho}};
      j["base_point"] = {{"p0", base.p0}, {"p", {0.0, 0.0, 0.0}}};
      j["stabilizer"] = "SU(2)";
      j["representations"] = "s in N/2";
      std::printf("%s\n", j.dump(2).c_str());
    } else {
      std::printf("orbit: Z_rho\ninvariant: rho = %g\nbase point: [%g, (0, 0, 0)]\n"
                  "stabilizer: SU(2)\nrepresentations: s in N/2\n",
                  rho, base.p0);
    }
    return 0;
  }
  if (dim != 2) {
    std::fprintf(stderr, "error: --dim must be 2 or 3\n");
    return 2;
  }
  if (p.size() != 2) {
    std::fprintf(stderr, "error: dim=2 requires --p with 2 components\n");
    return 2;
  }
  const MultiplierParams mp{tau, F, S};
  const MomentumPoint2 pt{p0, {p[0], p[1]}};
  const OrbitClass2 o = classify_orbit2(mp, pt);
  const MomentumPoint2 base = base_point(o);
  const StabilizerInfo info = describe(o);
  const char* inv_name = o.family == OrbitFamily::Z1   ? "rho"
                         : o.family == OrbitFamily::Z4 ? "p0"
                         : o.family == OrbitFamily::Z2 ? "none"
                                                       : "r";
  if (as_json) {
    ordered_json j;
    j["dim"] = 2;
    j["family"] = family_name(o.family);
    j["trivial_orbit"] = (o.family == OrbitFamily::Z4);
    j["invariant"] = {{"name", inv_name}, {"value", o.invariant}};
    j["base_point"] = {{"p0", base.p0}, {"p", {base.p.x, base.p.y}}};
    j["stabilizer"] = info.stabilizer;
    j["representations"] = info.menu;
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    if (o.family == OrbitFamily::Z4)
      std::printf("orbit: Z4, trivial orbit\n");
    else
      std::printf("orbit: %s\n", family_name(o.family).c_str());
    if (o.family != OrbitFamily::Z2) std::printf("invariant: %s = %g\n", inv_name, o.invariant);
    std::printf("base point: [%g, (%g, %g)]\n", base.p0, base.p.x, base.p.y);
    std::printf("stabilizer: %s\n", info.stabilizer.c_str());
    std::printf("representations: %s\n", info.menu.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"projective Galilei representations: classification and verification"};
  app.require_subcommand(1);
  bool verbatim = false;
  app.add_flag("--verbatim-phases", verbatim,
               "use the uncorrected legacy phase conventions (these fail the law checks; "
               "kept for documentation)");

  // classify
  auto* cls = app.add_subcommand("classify", "classify a dual-space point into its orbit family");
  int dim = 2;
  double tau = 0, F = 0, S = 0, p0 = 0;
  std::vector<double> pvec;
  bool cls_json = false;
  cls->add_option("--dim", dim, "spacetime dimension selector: 2 (for 1+2) or 3 (for 1+3)")
      ->required();
  cls->add_option("--tau", tau, "mass parameter tau");
  cls->add_option("--F", F, "second central parameter F (1+2 only)");
  cls->add_option("--S", S, "third central parameter S (1+2 only)");
  cls->add_option("--p0", p0, "energy component");
  cls->add_option("--p", pvec, "momentum components, comma separated")->delimiter(',');
  cls->add_flag("--json", cls_json, "emit JSON");

  // verify
  auto* ver = app.add_subcommand("verify", "run the property sweeps for one catalogue case");
  std::string case_name;
  CaseParams cp;
  SweepConfig cfg;
  double tol_flag = 0;
  bool ver_json = false;
  std::uint64_t seed = 42;
  int pairs = 1000, points = 100;
  ver->add_option("--case", case_name, "G3|A2|B2|C2i|C2ii|D2r0")->required();
  ver->add_option("--tau", cp.tau, "mass parameter tau");
  ver->add_option("--F", cp.F, "parameter F");
  ver->add_option("--S", cp.S, "parameter S");
  ver->add_option("--r", cp.r, "orbit radius r");
  ver->add_option("--rho", cp.rho, "orbit invariant rho");
  ver->add_option("--s", cp.s, "stabilizer character s (spin for G3)");
  ver->add_option("--t", cp.t, "stabilizer character t");
  ver->add_option("--lambda", cp.lambda, "torus representation label lambda");
  ver->add_option("--seed", seed, "random seed");
  ver->add_option("--pairs", pairs, "operator pairs per sweep");
  ver->add_option("--points", points, "sample points per sweep");
  auto* tol_opt = ver->add_option("--tol", tol_flag, "tolerance override for every check");
  ver->add_flag("--json", ver_json, "emit JSON");

  // report
  auto* repc = app.add_subcommand("report", "aggregate JSON report over the catalogue");
  bool all = false;
  std::vector<std::string> filter;
  std::uint64_t rseed = 42;
  int rpairs = 1000, rpoints = 100;
  bool rep_json = false;
  repc->add_flag("--all", all, "run every catalogue case");
  repc->add_option("--case", filter, "run only the named catalogue cases")
      ->take_all();
  repc->add_option("--seed", rseed, "random seed");
  repc->add_option("--pairs", rpairs, "operator pairs per sweep");
  repc->add_option("--points", rpoints, "sample points per sweep");
  repc->add_flag("--json", rep_json, "emit JSON (default: human-readable text)");

  CLI11_PARSE(app, argc, argv);

  if (cls->parsed()) return cmd_classify(dim, tau, F, S, p0, pvec, cls_json);

  if (ver->parsed()) {
    if (pairs < 1 || points < 1) {
      std::fprintf(stderr, "error: pairs and points must be >= 1\n");
      return 2;
    }
    if (tol_opt->count() > 0) {
      if (tol_flag <= 0) {
        std::fprintf(stderr, "error: tol must be > 0\n");
        return 2;
      }
      cfg.tol_override = tol_flag;
    }
    cfg.seed = seed;
    cfg.pairs = pairs;
    cfg.points = points;
    cfg.verbatim = verbatim;
    try {
      const CaseReport rep = run_case(case_name, cp, cfg);
      if (ver_json)
        std::printf("%s\n", report_to_json({rep}).dump(2).c_str());
      else
        print_report_text(rep);
      return rep.pass ? 0 : 1;
    } catch (const std::invalid_argument& e) {
      std::fprintf(stderr, "error: %s\n", e.what());
      return 2;
    }
  }

  // report
  SweepConfig rcfg;
  rcfg.seed = rseed;
  rcfg.pairs = rpairs;
  rcfg.points = rpoints;
  rcfg.verbatim = verbatim;
  std::vector<std::string> names;
  if (all) {
    names = catalogue_names();
  } else {
    names = filter;
    const auto known = catalogue_names();
    for (const auto& n : names) {
      if (std::find(known.begin(), known.end(), n) == known.end()) {
        std::fprintf(stderr, "error: unknown catalogue case %s\n", n.c_str());
        return 2;
      }
    }
    std::sort(names.begin(), names.end());
  }
  std::vector<CaseReport> reports;
  bool ok = true;
  for (const auto& n : names) {
    reports.push_back(run_catalogue_case(n, rcfg));
    ok = ok && reports.back().pass;
  }
  if (rep_json) {
    std::printf("%s\n", report_to_json(reports).dump(2).c_str());
  } else {
    for (const auto& rep : reports) print_report_text(rep);
    std::printf("%zu case(s), %s\n", reports.size(), ok ? "all pass" : "FAILURES");
  }
  return ok ? 0 : 1;
}
