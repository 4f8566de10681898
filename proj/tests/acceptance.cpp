// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Every tolerance is pinned here.

#include <cstdio>
#include <string>
#include <vector>

#include "galrep/verify.hpp"

using namespace galrep;

namespace {

int g_failures = 0;

void line(int idx, const char* what, double residual, double tol, bool pass,
          const std::string& note = "") {
  std::printf("[%s] criterion %2d: %s (max residual %.3e, tol %.1e)%s%s\n", pass ? "PASS" : "FAIL",
              idx, what, residual, tol, note.empty() ? "" : " -- ", note.c_str());
  if (!pass) ++g_failures;
}

// ---- criterion 1 ----------------------------------------------------------
void criterion1() {
  Rng rng(1001);
  double worst = 0;
  for (double tau : {1.0, -0.5, 3.0}) {
    auto m = [tau](const Gal3Element& a, const Gal3Element& b) { return m_tau(tau, a, b); };
    for (int i = 0; i < 10000; ++i)
      worst = std::max(worst, check_multiplier_identity(m, random_gal3(rng), random_gal3(rng),
                                                        random_gal3(rng)));
  }
  const MultiplierParams combos[] = {{1, 1, 1},    {1, 0, 0},  {0, 1, 0},  {0, 0, 1},
                                     {-0.5, 2, 0}, {3, 0, -1}, {0, 1, -2}, {-1, -1, 0.5}};
  for (const auto& p : combos) {
    auto m = [&p](const Gal2Element& a, const Gal2Element& b) { return m_tfs(p, a, b); };
    for (int i = 0; i < 10000; ++i)
      worst = std::max(worst, check_multiplier_identity(m, random_gal2(rng), random_gal2(rng),
                                                        random_gal2(rng)));
  }
  line(1, "multiplier 2-cocycle identity (m_tau and m_{tau,F,S})", worst, 1e-10, worst < 1e-10);
}

// ---- criterion 2 ----------------------------------------------------------
void criterion2() {
  Rng rng(1002);
  double worst = 0;
  for (int i = 0; i < 10000; ++i) {
    const Gal2Element a = random_gal2(rng), b = random_gal2(rng), c = random_gal2(rng);
    worst = std::max(worst,
                     max_abs_diff(compose2(compose2(a, b), c), compose2(a, compose2(b, c))));
    worst = std::max(worst, max_abs_diff(compose2(a, inverse2(a)), Gal2Element::identity()));
    worst = std::max(worst, max_abs_diff(compose2(inverse2(a), a), Gal2Element::identity()));
    worst = std::max(worst, max_abs_diff(rot2_delta(a.x + b.x), rot2_delta(a.x) * rot2_delta(b.x)));
    const SpacetimePoint2 pt{rng.uniform(-2, 2), rng.vec2(-2, 2)};
    const SpacetimePoint2 l = act_spacetime(compose2(a, b), pt);
    const SpacetimePoint2 r = act_spacetime(a, act_spacetime(b, pt));
    worst = std::max(worst, std::max(std::fabs(l.T - r.T), max_abs(l.X - r.X)));

    const Gal3Element x = random_gal3(rng), y = random_gal3(rng), z = random_gal3(rng);
    worst = std::max(worst,
                     max_abs_diff(compose3(compose3(x, y), z), compose3(x, compose3(y, z))));
    worst = std::max(worst, max_abs_diff(compose3(x, inverse3(x)), Gal3Element::identity()));
    worst = std::max(worst, max_abs_diff(su2_delta(x.A * y.A), su2_delta(x.A) * su2_delta(y.A)));
    const SpacetimePoint3 pt3{rng.uniform(-2, 2), rng.vec3(-2, 2)};
    const SpacetimePoint3 l3 = act_spacetime(compose3(x, y), pt3);
    const SpacetimePoint3 r3 = act_spacetime(x, act_spacetime(y, pt3));
    worst = std::max(worst, std::max(std::fabs(l3.T - r3.T), max_abs(l3.X - r3.X)));
  }
  line(2, "group axioms, covering homomorphisms, spacetime action", worst, 1e-10, worst < 1e-10);
}

// ---- criterion 3 ----------------------------------------------------------
void criterion3() {
  Rng rng(1003);
  double drift = 0;
  bool tags_ok = true;
  const MultiplierParams ps[] = {{1.5, 1, 0}, {-0.7, 0, 2}, {0, 1, 0}, {0, -1, 0.9}, {0, 0.4, 0}};
  for (const auto& p : ps) {
    for (int i = 0; i < 10000; ++i) {
      MomentumPoint2 q{rng.uniform(-2, 2), rng.vec2(-2, 2)};
      if (i % 7 == 0) q.p = {0, 0};
      const OrbitClass2 before = classify_orbit2(p, q);
      const OrbitClass2 after = classify_orbit2(p, act_momentum2(p, random_gal2_homog(rng), q));
      tags_ok = tags_ok && (before.family == after.family);
      drift = std::max(drift, std::fabs(before.invariant - after.invariant));
    }
  }

  // chart Jacobians by central differences
  const double h = 1e-5;
  double jworst = 0;
  auto det2 = [](double a, double b, double c, double d) { return a * d - b * c; };
  for (int i = 0; i < 300; ++i) {
    const Gal2Element g = random_gal2_homog(rng);
    {  // Z1 chart
      const MultiplierParams p{1.3, 1, 0};
      const Vec2 q = rng.vec2(-2, 2);
      auto F = [&](double qx, double qy) { return chart_act_z1(p, g, {qx, qy}); };
      const Vec2 xp = F(q.x + h, q.y), xm = F(q.x - h, q.y);
      const Vec2 yp = F(q.x, q.y + h), ym = F(q.x, q.y - h);
      jworst = std::max(jworst, std::fabs(det2((xp.x - xm.x) / (2 * h), (yp.x - ym.x) / (2 * h),
                                               (xp.y - xm.y) / (2 * h), (yp.y - ym.y) / (2 * h)) -
                                          1));
    }
    {  // cylinder chart
      const MultiplierParams p{0, 1, 0.9};
      const ChartCyl x{rng.uniform(-2, 2), rng.uniform(0, kTwoPi)};
      auto F = [&](double p0, double th) { return chart_act_cyl(p, 1.6, g, {p0, th}); };
      const ChartCyl ap = F(x.p0 + h, x.theta), am = F(x.p0 - h, x.theta);
      const ChartCyl bp = F(x.p0, x.theta + h), bm = F(x.p0, x.theta - h);
      jworst = std::max(jworst, std::fabs(det2((ap.p0 - am.p0) / (2 * h), (bp.p0 - bm.p0) / (2 * h),
                                               wrap_to_pi(ap.theta - am.theta) / (2 * h),
                                               wrap_to_pi(bp.theta - bm.theta) / (2 * h)) -
                                          1));
    }
    {  // line chart
      const MultiplierParams p{0, 1, 1.2};
      const double p0 = rng.uniform(-2, 2);
      jworst = std::max(jworst, std::fabs((chart_act_line(p, g, p0 + h) -
                                           chart_act_line(p, g, p0 - h)) /
                                              (2 * h) -
                                          1));
    }
    {  // Z2 chart (full 3x3 determinant)
      const MultiplierParams p{1.3, 1, -0.8};
      const MomentumPoint2 q{rng.uniform(-2, 2), rng.vec2(-2, 2)};
      auto F = [&](double p0, double px, double py) {
        return chart_act_z2(p, g, {p0, {px, py}});
      };
      double J[3][3];
      const double c[3] = {q.p0, q.p.x, q.p.y};
      for (int j = 0; j < 3; ++j) {
        double cp[3] = {c[0], c[1], c[2]}, cm[3] = {c[0], c[1], c[2]};
        cp[j] += h;
        cm[j] -= h;
        const MomentumPoint2 fp = F(cp[0], cp[1], cp[2]), fm = F(cm[0], cm[1], cm[2]);
        J[0][j] = (fp.p0 - fm.p0) / (2 * h);
        J[1][j] = (fp.p.x - fm.p.x) / (2 * h);
        J[2][j] = (fp.p.y - fm.p.y) / (2 * h);
      }
      const double det = J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]) -
                         J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]) +
                         J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
      jworst = std::max(jworst, std::fabs(det - 1));
    }
  }
  const bool pass = tags_ok && drift < 1e-8 && jworst < 1e-6;
  line(3, "orbit classification invariance and unit chart Jacobians",
       std::max(drift, jworst), 1e-6, pass, tags_ok ? "" : "tag mismatch");
}

// ---- criterion 4 ----------------------------------------------------------
void criterion4() {
  Rng rng(1004);
  double worst_c = 0, worst_r = 0;
  auto probe = [&](auto adapter) {
    worst_c = std::max(worst_c, cocycle_residual_sweep(adapter, rng, 1000));
    worst_r = std::max(worst_r, restriction_residual(adapter, rng, 300));
  };
  for (int two_s : {0, 1, 2, 3}) probe(AdapterG3(CaseG3{1.0, two_s, 0.0}));
  for (double s : {0.0, 0.3}) probe(AdapterA2(CaseA2{1.0, 1.0, s, 0, false}));
  probe(AdapterB2(CaseB2{1.0, 1.0, 1.0}));
  probe(AdapterC2i(CaseC2i{1.0, 0.0, kTwoPi, 0.25, 0.7}));
  probe(AdapterC2i(CaseC2i{0.0, 1.0, 1.5, 0.25, 0.7}));
  for (double lambda : {0.0, 0.25}) probe(AdapterC2ii(CaseC2ii{1.0, 1.0, kTwoPi, lambda}));
  probe(AdapterD2r0(CaseD2r0{1.0, 1.0}));
  const bool pass = worst_c < 1e-8 && worst_r < 1e-9;
  line(4, "canonical cocycle strictness and restriction round-trip",
       std::max(worst_c, worst_r), 1e-8, pass);
}

// ---- criteria 5 and 6 ------------------------------------------------------
void criteria56() {
  Rng rng(1005);
  double worst_law = 0, worst_imp = 0;
  auto probe = [&](auto adapter) {
    worst_law = std::max(worst_law, law_residual(adapter, rng, 500, 100));
    worst_imp = std::max(worst_imp, imprimitivity_residual(adapter, rng, 100, 100));
  };
  probe(AdapterG3(CaseG3{1.0, 1, 0.0}));
  probe(AdapterG3(CaseG3{1.0, 2, 0.0}));
  probe(AdapterA2(CaseA2{1.0, 1.0, 0.3, 0, false}));
  probe(AdapterB2(CaseB2{1.0, 2.0, 1.0}));
  probe(AdapterC2i(CaseC2i{1.0, 0.0, kTwoPi, 0.25, 0.7}));
  probe(AdapterC2i(CaseC2i{0.0, 1.0, 1.5, 0.25, 0.7}));
  probe(AdapterC2ii(CaseC2ii{1.0, 1.0, kTwoPi, 0.25}));
  probe(AdapterD2r0(CaseD2r0{1.0, 1.0}));
  line(5, "m-representation law for every catalogue case", worst_law, 1e-8, worst_law < 1e-8);
  line(6, "imprimitivity relation U_g P_E U_g^{-1} = P_{g.E}", worst_imp, 1e-8, worst_imp < 1e-8);
}

// ---- criterion 7 ----------------------------------------------------------
void criterion7() {
  Rng rng(1007);
  double worst_u = 0, worst_h = 0, worst_def = 0;
  for (int i = 0; i < 1000; ++i) {
    const SU2Element A = random_su2(rng), B = random_su2(rng);
    for (int two_s = 1; two_s <= 8; ++two_s) {
      worst_u = std::max(worst_u, unitarity_defect(wigner_d(two_s, A)));
      worst_h = std::max(worst_h, max_abs_diff(wigner_d(two_s, A * B),
                                               wigner_d(two_s, A) * wigner_d(two_s, B)));
    }
    const CMatrix D = wigner_d(1, A);
    const auto m = A.matrix();
    for (int k = 0; k < 4; ++k) worst_def = std::max(worst_def, std::abs(D.a[k] - m[k]));
  }
  const bool pass = worst_u < 1e-10 && worst_h < 1e-9 && worst_def == 0;
  line(7, "Wigner matrices: unitarity, homomorphism, defining rep exact",
       std::max(worst_u, worst_h), 1e-9, pass,
       worst_def == 0 ? "" : "D^{1/2} != A");
}

// ---- criterion 8 ----------------------------------------------------------
void criterion8() {
  Rng rng(1008);
  double worst_rel = 0, worst_int = 0;
  for (double k : {1.0, -0.6}) {
    for (double lambda : {0.0, 0.25}) {
      worst_rel = std::max(worst_rel, torus_relation_residual(k, lambda, rng, 1000));
      worst_int = std::max(worst_int, torus_intertwiner_residual(k, lambda, rng));
    }
  }
  const bool pass = worst_rel < 1e-10 && worst_int < 1e-12;
  line(8, "torus representations: twisted product law and lambda+1 intertwiner",
       std::max(worst_rel, worst_int), 1e-10, pass);
}

// ---- criterion 9 ----------------------------------------------------------
void criterion9() {
  Rng rng(1009);
  double worst = 0;
  for (double F : {1.0, -2.0}) worst = std::max(worst, weyl_relation_residual(F, rng, 1000));
  line(9, "Weyl/CCR relation of the Schrodinger realization", worst, 1e-10, worst < 1e-10);
}

// ---- criterion 10 ---------------------------------------------------------
void criterion10() {
  Rng rng(1010);
  const double tau = 1.0;

  // (tau, F, S) = (1, 1, 0): shift the F = 0 line representation
  double worst_law = 0;
  {
    const CaseA2 base{tau, 0.0, 0.3, 0.0, false};
    auto apply0 = [&](const Gal2Element& g, WaveA2 f) {
      return apply_V2_caseA(base, g, std::move(f));
    };
    auto shifted = f_shift_transform(apply0, 1.0, tau);
    const MultiplierParams mp{tau, 1.0, 0.0};
    const WaveA2 f = packetA2(rng);
    std::vector<Vec2> pts;
    for (int i = 0; i < 100; ++i) pts.push_back(rng.vec2(-2, 2));
    for (int i = 0; i < 500; ++i) {
      const Gal2Element g1 = random_gal2(rng), g2 = random_gal2(rng);
      const WaveA2 lhs = shifted(compose2(g1, g2), f);
      const WaveA2 rhs = shifted(g1, shifted(g2, f));
      const complexd m = m_tfs(mp, g1, g2);
      for (const auto& p : pts) worst_law = std::max(worst_law, std::abs(lhs(p) - m * rhs(p)));
    }
  }
  // (tau, F, S) = (1, 2, 1): shift the F = 0 full-plane representation
  {
    const CaseB2 base{tau, 0.0, 1.0};
    auto apply0 = [&](const Gal2Element& g, WaveB2 f) {
      return apply_V2_caseB(base, g, std::move(f));
    };
    auto shifted = f_shift_transform(apply0, 2.0, tau);
    const MultiplierParams mp{tau, 2.0, 1.0};
    const WaveB2 f = packetB2(rng);
    std::vector<MomentumPoint2> pts;
    for (int i = 0; i < 100; ++i) pts.push_back({rng.uniform(-2, 2), rng.vec2(-2, 2)});
    for (int i = 0; i < 500; ++i) {
      const Gal2Element g1 = random_gal2(rng), g2 = random_gal2(rng);
      const WaveB2 lhs = shifted(compose2(g1, g2), f);
      const WaveB2 rhs = shifted(g1, shifted(g2, f));
      const complexd m = m_tfs(mp, g1, g2);
      for (const auto& p : pts) worst_law = std::max(worst_law, std::abs(lhs(p) - m * rhs(p)));
    }
  }

  // double application with opposite signs is the identity
  double worst_id = 0;
  {
    const CaseA2 base{tau, 0.0, 0.3, 0.0, false};
    auto apply0 = [&](const Gal2Element& g, WaveA2 f) {
      return apply_V2_caseA(base, g, std::move(f));
    };
    auto round = f_shift_transform(f_shift_transform(apply0, 1.7, tau), -1.7, tau);
    const WaveA2 f = packetA2(rng);
    for (int i = 0; i < 200; ++i) {
      const Gal2Element g = random_gal2(rng);
      const WaveA2 l = round(g, f);
      const WaveA2 r = apply0(g, f);
      const Vec2 p = rng.vec2(-2, 2);
      worst_id = std::max(worst_id, std::abs(l(p) - r(p)));
    }
  }
  const bool pass = worst_law < 1e-8 && worst_id < 1e-12;
  line(10, "F-shift transform: law at (1,1,0) and (1,2,1), involution",
       std::max(worst_law, worst_id), 1e-8, pass);
}

// ---- criterion 11 ---------------------------------------------------------
void criterion11() {
  Rng rng(1011);
  double ok_part = 0;
  ok_part = std::max(ok_part, kernel_scalar_residual(AdapterG3(CaseG3{1.0, 1, 0.0}), rng, 100));
  ok_part = std::max(ok_part,
                     kernel_scalar_residual(AdapterA2(CaseA2{1.0, 1.0, 0.3, 0, false}), rng, 100));
  ok_part = std::max(
      ok_part, kernel_scalar_residual(AdapterC2i(CaseC2i{1.0, 0.0, kTwoPi, 0.25, 0.7}), rng, 100));
  const double b2_part = kernel_scalar_residual(AdapterB2(CaseB2{1.0, 2.0, 1.0}), rng, 100);
  const bool pass = ok_part < 1e-10 && b2_part < 1e-10;
  char note[256];
  std::snprintf(note, sizeof note,
                "G3/A2/C2i residual %.1e < 1e-10; B2 residual %.1e: covering-kernel elements act "
                "on the B2 family by the p0-translation 2*pi*n*S, never by a scalar when S != 0 "
                "(V_k V_g = e^{2*pi*i*n*S*eta} V_g V_k forbids it), so this clause cannot hold",
                ok_part, b2_part);
  line(11, "covering-kernel scalarity for G3/A2/B2/C2i", std::max(ok_part, b2_part), 1e-10, pass,
       note);
}

// ---- criterion 12 ---------------------------------------------------------
void criterion12() {
  Rng rng(1012);
  AdapterA2 clean(CaseA2{1.0, 1.0, 0.3, 0, false});
  AdapterA2 broken = clean;
  broken.phi = jitter_cocycle(clean.phi, clean.po, 1e-3);
  const double c4 = cocycle_residual_sweep(broken, rng, 1000);
  const double c5 = homog_law_residual(broken, rng, 300, 60);
  const double c6 = imprimitivity_residual(broken, rng, 100, 60);

  AdapterG3 clean3(CaseG3{1.0, 1, 0.0});
  AdapterG3 broken3 = clean3;
  broken3.phi = jitter_cocycle(clean3.phi, clean3.po, 1e-3);
  const double c4m = cocycle_residual_sweep(broken3, rng, 500);

  const double least = std::min(std::min(c4, c5), std::min(c6, c4m));
  const bool pass = least > 1e-4;
  line(12, "negative control: 1e-3 phase jitter trips the detectors", least, 1e-4, pass,
       pass ? "all corrupted residuals exceed 1e-4" : "a detector failed to fire");
}

}  // namespace

int main() {
  std::printf("acceptance suite (deterministic seeds)\n");
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criteria56();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  criterion12();
  if (g_failures == 0) {
    std::printf("all criteria pass\n");
  } else {
    std::printf("%d criterion(s) failed\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
