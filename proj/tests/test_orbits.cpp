#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "galrep/orbits.hpp"
#include "galrep/sampling.hpp"

using namespace galrep;

TEST_CASE("act_momentum3 and the rho invariant") {
  Rng rng(31);
  const double tau = 1.4;
  const MomentumPoint3 pt{0.6, {1, -2, 0.5}};
  const MomentumPoint3 same = act_momentum3(tau, Gal3Element::identity(), pt);
  CHECK(max_abs_diff(same, pt) < 1e-15);

  // (I, v) . [p0, 0] = [p0 + tau v^2/2, -tau v]
  const Vec3 v{0.3, 0.7, -1.1};
  const MomentumPoint3 b =
      act_momentum3(tau, {SU2Element::identity(), v, 0, {0, 0, 0}}, {0.6, {0, 0, 0}});
  CHECK(b.p0 == doctest::Approx(0.6 + 0.5 * tau * norm2(v)));
  CHECK(max_abs(b.p - (-tau) * v) < 1e-15);

  double worst = 0, worst_axiom = 0;
  for (int i = 0; i < 10000; ++i) {
    const Gal3Element h = random_gal3_homog(rng);
    const MomentumPoint3 q{rng.uniform(-2, 2), rng.vec3(-2, 2)};
    worst = std::max(worst,
                     std::fabs(rho_invariant(tau, act_momentum3(tau, h, q)) - rho_invariant(tau, q)));
    const Gal3Element h2 = random_gal3_homog(rng);
    const MomentumPoint3 lhs = act_momentum3(tau, compose3(h, h2), q);
    const MomentumPoint3 rhs = act_momentum3(tau, h, act_momentum3(tau, h2, q));
    worst_axiom = std::max(worst_axiom, max_abs_diff(lhs, rhs));
  }
  CHECK(worst < 1e-9);
  CHECK(worst_axiom < 1e-10);
}

TEST_CASE("act_momentum2 axioms and invariants") {
  Rng rng(32);
  const MultiplierParams ps[] = {{1.2, 0.5, 0}, {1.2, 0.5, -0.8}, {0, 1, 0}, {0, 0.3, 1.7}};
  for (const auto& p : ps) {
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
      const Gal2Element h1 = random_gal2_homog(rng), h2 = random_gal2_homog(rng);
      const MomentumPoint2 q{rng.uniform(-2, 2), rng.vec2(-2, 2)};
      const MomentumPoint2 lhs = act_momentum2(p, compose2(h1, h2), q);
      const MomentumPoint2 rhs = act_momentum2(p, h1, act_momentum2(p, h2, q));
      worst = std::max(worst, max_abs_diff(lhs, rhs));
      if (p.S == 0)
        worst = std::max(worst, std::fabs(rho_invariant(p.tau, act_momentum2(p, h1, q)) -
                                          rho_invariant(p.tau, q)));
      if (p.tau == 0)
        worst = std::max(worst, std::fabs(norm(act_momentum2(p, h1, q).p) - norm(q.p)));
    }
    CHECK(worst < 1e-10);
  }

  // tau = 0 closed form: [p0 - v.d(x)p - S x, d(x)p]
  const MultiplierParams p0{0, 0, 1.3};
  const Gal2Element h{0.9, {0.4, -0.2}, 0, {0, 0}};
  const MomentumPoint2 q{0.5, {1.1, -0.6}};
  const MomentumPoint2 out = act_momentum2(p0, h, q);
  const Vec2 Rp = rot2_delta(0.9) * q.p;
  CHECK(out.p0 == doctest::Approx(0.5 - dot(h.v, Rp) - 1.3 * 0.9));
  CHECK(max_abs(out.p - Rp) < 1e-15);
}

TEST_CASE("orbit classification") {
  // frozen examples
  const OrbitClass2 o1 = classify_orbit2({1, 0, 0}, {0, {1, 1}});
  CHECK(o1.family == OrbitFamily::Z1);
  CHECK(o1.invariant == doctest::Approx(2));

  const OrbitClass2 o4 = classify_orbit2({0, 0.7, 0}, {5, {0, 0}});
  CHECK(o4.family == OrbitFamily::Z4);
  CHECK(o4.invariant == doctest::Approx(5));

  const OrbitClass2 o2 = classify_orbit2({1, 0, 2}, {-0.3, {4, 1}});
  CHECK(o2.family == OrbitFamily::Z2);

  const OrbitClass2 o3 = classify_orbit2({0, 0, 0}, {1, {0.6, -0.8}});
  CHECK(o3.family == OrbitFamily::Z3);
  CHECK(o3.invariant == doctest::Approx(1));

  const OrbitClass2 o5 = classify_orbit2({0, 1, -2}, {0.4, {0, 0}});
  CHECK(o5.family == OrbitFamily::Z5);
  CHECK(o5.invariant == doctest::Approx(0));

  // invariance under the action: tag and invariant
  Rng rng(33);
  const MultiplierParams ps[] = {{1.5, 1, 0}, {-0.7, 0, 2}, {0, 1, 0}, {0, -1, 0.9}};
  for (const auto& p : ps) {
    double drift = 0;
    for (int i = 0; i < 10000; ++i) {
      MomentumPoint2 q{rng.uniform(-2, 2), rng.vec2(-2, 2)};
      if (i % 5 == 0) q.p = {0, 0};  // exercise the degenerate orbits too
      const OrbitClass2 before = classify_orbit2(p, q);
      const OrbitClass2 after = classify_orbit2(p, act_momentum2(p, random_gal2_homog(rng), q));
      REQUIRE(before.family == after.family);
      drift = std::max(drift, std::fabs(before.invariant - after.invariant));
    }
    CHECK(drift < 1e-8);
  }
}

TEST_CASE("base points") {
  const OrbitClass2 z1{OrbitFamily::Z1, 3.0, {1, 0, 0}};
  const MomentumPoint2 b1 = base_point(z1);
  CHECK(b1.p0 == doctest::Approx(-1.5));
  CHECK(max_abs(b1.p) < 1e-15);
  const OrbitClass2 back = classify_orbit2(z1.params, b1);
  CHECK(back.family == OrbitFamily::Z1);
  CHECK(back.invariant == doctest::Approx(3.0));

  const OrbitClass2 z3{OrbitFamily::Z3, 2.5, {0, 0, 0}};
  const MomentumPoint2 b3 = base_point(z3);
  CHECK(b3.p0 == doctest::Approx(0));
  CHECK(b3.p.x == doctest::Approx(2.5));

  const OrbitClass2 z2{OrbitFamily::Z2, 0, {1, 1, 1}};
  CHECK(max_abs_diff(base_point(z2), MomentumPoint2{0, {0, 0}}) < 1e-15);

  CHECK(max_abs_diff(base_point3(2.0, 4.0), MomentumPoint3{-1.0, {0, 0, 0}}) < 1e-15);
}

TEST_CASE("stabilizer membership") {
  const OrbitClass2 z1{OrbitFamily::Z1, 2.0, {1, 0.5, 0}};
  const auto a = stabilizer_membership(z1, {1.3, {0, 0}, 0, {0, 0}});
  REQUIRE(a.has_value());
  CHECK(std::get<AngleOnly>(*a).x == doctest::Approx(1.3));
  CHECK(!stabilizer_membership(z1, {0, {0.1, 0}, 0, {0, 0}}).has_value());

  // circle orbit, S != 0: (2 pi, -2 pi S / r e1 + 3 e2) -> (n=1, alpha=3)
  const MultiplierParams mp{0, 0.7, 1.1};
  const OrbitClass2 z5{OrbitFamily::Z5, 2.0, mp};
  const Gal2Element h{kTwoPi, {-kTwoPi * mp.S / 2.0, 3.0}, 0, {0, 0}};
  const auto tl = stabilizer_membership(z5, h);
  REQUIRE(tl.has_value());
  CHECK(std::get<TorusLine>(*tl).n == 1);
  CHECK(std::get<TorusLine>(*tl).alpha == doctest::Approx(3.0));
  // round trip to the embedded element is exact
  const Gal2Element emb = embed_torus_line(z5, 1, 3.0);
  CHECK(max_abs_diff(emb, h) < 1e-15);
  // wrong first velocity component is not a member
  CHECK(!stabilizer_membership(z5, {kTwoPi, {0.5, 3.0}, 0, {0, 0}}).has_value());

  // r = 0 orbit: boosts only
  const OrbitClass2 z50{OrbitFamily::Z5, 0, {0, 1, 1}};
  const auto bo = stabilizer_membership(z50, {0, {0.4, -0.7}, 0, {0, 0}});
  REQUIRE(bo.has_value());
  CHECK(max_abs(std::get<BoostOnly>(*bo).v - Vec2{0.4, -0.7}) < 1e-15);
  CHECK(!stabilizer_membership(z50, {0.1, {0.4, -0.7}, 0, {0, 0}}).has_value());

  // trivial orbit: everything fixes the base point
  const OrbitClass2 z4{OrbitFamily::Z4, 5.0, {0, 1, 0}};
  Rng rng(34);
  const Gal2Element any = random_gal2_homog(rng);
  CHECK(stabilizer_membership(z4, any).has_value());

  // identity is always a member with zero coordinates
  const auto id5 = stabilizer_membership(z5, Gal2Element::identity());
  REQUIRE(id5.has_value());
  CHECK(std::get<TorusLine>(*id5).n == 0);
  CHECK(std::get<TorusLine>(*id5).alpha == doctest::Approx(0));

  // stabilizer coordinates add under composition
  for (int i = 0; i < 200; ++i) {
    const long long n1 = rng.uniform_int(-3, 3), n2 = rng.uniform_int(-3, 3);
    const double a1 = rng.uniform(-2, 2), a2 = rng.uniform(-2, 2);
    const Gal2Element prod = compose2(embed_torus_line(z5, n1, a1), embed_torus_line(z5, n2, a2));
    const auto sum = stabilizer_membership(z5, prod);
    REQUIRE(sum.has_value());
    CHECK(std::get<TorusLine>(*sum).n == n1 + n2);
    CHECK(std::get<TorusLine>(*sum).alpha == doctest::Approx(a1 + a2).epsilon(1e-12));
  }
}

TEST_CASE("cross sections hit their targets") {
  Rng rng(35);

  // Z1: c(base) = e and the closed form (0, -p/tau)
  const OrbitClass2 z1{OrbitFamily::Z1, 1.2, {2.0, 1, 0}};
  CHECK(max_abs_diff(cross_section(z1, base_point(z1)), Gal2Element::identity()) < 1e-15);
  const MomentumPoint2 pt1{(norm2(Vec2{0.4, -0.8}) - 1.2) / 4.0, {0.4, -0.8}};
  const Gal2Element c1 = cross_section(z1, pt1);
  CHECK(c1.x == doctest::Approx(0));
  CHECK(max_abs(c1.v - (-0.5) * pt1.p) < 1e-15);
  CHECK_THROWS_AS(cross_section(z1, MomentumPoint2{10, {0.4, -0.8}}), std::invalid_argument);

  // Z2 closed form x = (p^2/(2 tau) - p0) / S
  const OrbitClass2 z2{OrbitFamily::Z2, 0, {1.5, 0, -0.7}};
  const MomentumPoint2 pt2{0.9, {1.1, 0.3}};
  const Gal2Element c2 = cross_section(z2, pt2);
  CHECK(c2.x == doctest::Approx((norm2(pt2.p) / 3.0 - 0.9) / -0.7));
  CHECK(max_abs(c2.v - (-1.0 / 1.5) * pt2.p) < 1e-15);

  // section property across every family
  struct FamilyGen {
    OrbitClass2 orbit;
    std::function<MomentumPoint2(Rng&)> sample;
  };
  std::vector<FamilyGen> fams;
  fams.push_back({z1, [&](Rng& r) {
                    const Vec2 p = r.vec2(-2, 2);
                    return MomentumPoint2{(norm2(p) - 1.2) / 4.0, p};
                  }});
  fams.push_back({z2, [&](Rng& r) { return MomentumPoint2{r.uniform(-2, 2), r.vec2(-2, 2)}; }});
  const OrbitClass2 z3{OrbitFamily::Z3, 1.7, {0, 1, 0}};
  fams.push_back({z3, [&](Rng& r) {
                    return cyl_to_momentum(1.7, {r.uniform(-2, 2), r.uniform(0, kTwoPi)});
                  }});
  const OrbitClass2 z5{OrbitFamily::Z5, 0.8, {0, -1, 0.9}};
  fams.push_back({z5, [&](Rng& r) {
                    return cyl_to_momentum(0.8, {r.uniform(-2, 2), r.uniform(0, kTwoPi)});
                  }});
  const OrbitClass2 z50{OrbitFamily::Z5, 0, {0, 1, 1.3}};
  fams.push_back({z50, [&](Rng& r) { return MomentumPoint2{r.uniform(-2, 2), {0, 0}}; }});

  for (const auto& fam : fams) {
    const MomentumPoint2 base = base_point(fam.orbit);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
      const MomentumPoint2 pt = fam.sample(rng);
      const Gal2Element c = cross_section(fam.orbit, pt);
      worst = std::max(worst, max_abs_diff(act_momentum2(fam.orbit.params, c, base), pt));
    }
    CHECK(worst < 1e-9);
  }

  // 1+3 section
  const double tau = 1.1, rho = -0.4;
  double worst3 = 0;
  for (int i = 0; i < 10000; ++i) {
    const Vec3 p = rng.vec3(-2, 2);
    const MomentumPoint3 pt{(norm2(p) - rho) / (2 * tau), p};
    const Gal3Element c = cross_section3(tau, rho, pt);
    worst3 = std::max(worst3, max_abs_diff(act_momentum3(tau, c, base_point3(tau, rho)), pt));
  }
  CHECK(worst3 < 1e-9);

  // transitivity spot-check through sections
  for (const auto& fam : {fams[1], fams[3]}) {  // Z2 and Z5
    for (int i = 0; i < 500; ++i) {
      const MomentumPoint2 a = fam.sample(rng), b = fam.sample(rng);
      const Gal2Element g =
          compose2(cross_section(fam.orbit, b), inverse2(cross_section(fam.orbit, a)));
      CHECK(max_abs_diff(act_momentum2(fam.orbit.params, g, a), b) < 1e-9);
    }
  }
}

TEST_CASE("angle_section") {
  CHECK(angle_section({2.0, 0}, 2.0) == doctest::Approx(0));
  // circle cross sections refuse points off the circle
  const OrbitClass2 z3c{OrbitFamily::Z3, 1.0, {0, 0, 0}};
  CHECK_THROWS_AS(cross_section(z3c, MomentumPoint2{0, {2.0, 0}}), std::invalid_argument);
  CHECK(angle_section({0, 3.0}, 3.0) == doctest::Approx(3 * kPi / 2));
  CHECK_THROWS_AS(angle_section({0, 0}, 1.0), std::invalid_argument);

  Rng rng(36);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const Vec2 u = random_unit2(rng);
    const double r = rng.uniform(0.2, 3.0);
    const double c = angle_section(r * u, r);
    CHECK(c >= 0);
    CHECK(c < kTwoPi);
    worst = std::max(worst, max_abs(rot2_delta(c) * Vec2{1, 0} - u));
  }
  CHECK(worst < 1e-10);
}

namespace {
double det2(double a, double b, double c, double d) { return a * d - b * c; }
double det3(const Mat3& m) {
  return m.a[0][0] * (m.a[1][1] * m.a[2][2] - m.a[1][2] * m.a[2][1]) -
         m.a[0][1] * (m.a[1][0] * m.a[2][2] - m.a[1][2] * m.a[2][0]) +
         m.a[0][2] * (m.a[1][0] * m.a[2][1] - m.a[1][1] * m.a[2][0]);
}
}  // namespace

TEST_CASE("chart actions preserve volume (unit Jacobian)") {
  Rng rng(37);
  const double h = 1e-5;
  double worst = 0;

  // Z1 chart (2d)
  const MultiplierParams pz1{1.3, 1, 0};
  for (int i = 0; i < 200; ++i) {
    const Gal2Element g = random_gal2_homog(rng);
    const Vec2 p = rng.vec2(-2, 2);
    auto F = [&](const Vec2& q) { return chart_act_z1(pz1, g, q); };
    const Vec2 dxp = F({p.x + h, p.y}), dxm = F({p.x - h, p.y});
    const Vec2 dyp = F({p.x, p.y + h}), dym = F({p.x, p.y - h});
    const double det = det2((dxp.x - dxm.x) / (2 * h), (dyp.x - dym.x) / (2 * h),
                            (dxp.y - dxm.y) / (2 * h), (dyp.y - dym.y) / (2 * h));
    worst = std::max(worst, std::fabs(det - 1));
  }

  // Z2 chart (3d)
  const MultiplierParams pz2{1.3, 1, -0.8};
  for (int i = 0; i < 200; ++i) {
    const Gal2Element g = random_gal2_homog(rng);
    const MomentumPoint2 pt{rng.uniform(-2, 2), rng.vec2(-2, 2)};
    auto F = [&](double p0, double px, double py) {
      return chart_act_z2(pz2, g, {p0, {px, py}});
    };
    Mat3 J;
    const double c[3] = {pt.p0, pt.p.x, pt.p.y};
    for (int j = 0; j < 3; ++j) {
      double cp[3] = {c[0], c[1], c[2]}, cm[3] = {c[0], c[1], c[2]};
      cp[j] += h;
      cm[j] -= h;
      const MomentumPoint2 fp = F(cp[0], cp[1], cp[2]), fm = F(cm[0], cm[1], cm[2]);
      J.a[0][j] = (fp.p0 - fm.p0) / (2 * h);
      J.a[1][j] = (fp.p.x - fm.p.x) / (2 * h);
      J.a[2][j] = (fp.p.y - fm.p.y) / (2 * h);
    }
    worst = std::max(worst, std::fabs(det3(J) - 1));
  }

  // cylinder chart (p0, theta)
  const MultiplierParams pc{0, 1, 0.9};
  const double r = 1.6;
  for (int i = 0; i < 200; ++i) {
    const Gal2Element g = random_gal2_homog(rng);
    const ChartCyl x{rng.uniform(-2, 2), rng.uniform(0, kTwoPi)};
    auto F = [&](double p0, double th) { return chart_act_cyl(pc, r, g, {p0, th}); };
    const ChartCyl f0p = F(x.p0 + h, x.theta), f0m = F(x.p0 - h, x.theta);
    const ChartCyl ftp = F(x.p0, x.theta + h), ftm = F(x.p0, x.theta - h);
    const double det =
        det2((f0p.p0 - f0m.p0) / (2 * h), (ftp.p0 - ftm.p0) / (2 * h),
             wrap_to_pi(f0p.theta - f0m.theta) / (2 * h), wrap_to_pi(ftp.theta - ftm.theta) / (2 * h));
    worst = std::max(worst, std::fabs(det - 1));
  }

  // line chart
  const MultiplierParams pl{0, 1, 1.2};
  for (int i = 0; i < 200; ++i) {
    const Gal2Element g = random_gal2_homog(rng);
    const double p0 = rng.uniform(-2, 2);
    const double det = (chart_act_line(pl, g, p0 + h) - chart_act_line(pl, g, p0 - h)) / (2 * h);
    worst = std::max(worst, std::fabs(det - 1));
  }

  // 1+3 chart (3d)
  for (int i = 0; i < 200; ++i) {
    const Gal3Element g = random_gal3_homog(rng);
    const Vec3 p = rng.vec3(-2, 2);
    Mat3 J;
    const double c[3] = {p.x, p.y, p.z};
    for (int j = 0; j < 3; ++j) {
      double cp[3] = {c[0], c[1], c[2]}, cm[3] = {c[0], c[1], c[2]};
      cp[j] += h;
      cm[j] -= h;
      const Vec3 fp = chart_act_g3(1.3, g, {cp[0], cp[1], cp[2]});
      const Vec3 fm = chart_act_g3(1.3, g, {cm[0], cm[1], cm[2]});
      J.a[0][j] = (fp.x - fm.x) / (2 * h);
      J.a[1][j] = (fp.y - fm.y) / (2 * h);
      J.a[2][j] = (fp.z - fm.z) / (2 * h);
    }
    worst = std::max(worst, std::fabs(det3(J) - 1));
  }

  CHECK(worst < 1e-6);
}
