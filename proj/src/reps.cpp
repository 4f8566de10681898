#include "galrep/reps.hpp"

namespace galrep {

// ---- gates ------------------------------------------------------------------

void validate(const CaseG3& c) {
  if (c.tau == 0) throw std::invalid_argument("G3: requires tau != 0");
  if (c.two_s < 0 || c.two_s > 25) throw std::invalid_argument("G3: requires 0 <= 2s <= 25");
}
void validate(const CaseA2& c) {
  if (c.tau == 0) throw std::invalid_argument("A2: requires tau != 0");
}
void validate(const CaseB2& c) {
  if (c.tau == 0) throw std::invalid_argument("B2: requires tau != 0");
  if (c.S == 0) throw std::invalid_argument("B2: requires S != 0");
}
void validate(const CaseC2i& c) {
  if (c.r <= 0) throw std::invalid_argument("C2i: requires r > 0");
  if (c.F != 0 && c.S != 0)
    throw std::invalid_argument("C2i: requires k = 2 pi F S / r = 0 (F = 0 or S = 0)");
}
void validate(const CaseC2ii& c) {
  if (c.r <= 0) throw std::invalid_argument("C2ii: requires r > 0");
  if (c.F == 0 || c.S == 0) throw std::invalid_argument("C2ii: requires F != 0 and S != 0");
}
void validate(const CaseD2r0& c) {
  if (c.F == 0) throw std::invalid_argument("D2r0: requires F != 0");
  if (c.S == 0) throw std::invalid_argument("D2r0: requires S != 0");
}

// ---- group ops / orbits -------------------------------------------------------

GroupOps<Gal2Element> group_ops2() {
  return {[](const Gal2Element& a, const Gal2Element& b) { return compose2(a, b); },
          [](const Gal2Element& g) { return inverse2(g); }, Gal2Element::identity()};
}

GroupOps<Gal3Element> group_ops3() {
  return {[](const Gal3Element& a, const Gal3Element& b) { return compose3(a, b); },
          [](const Gal3Element& g) { return inverse3(g); }, Gal3Element::identity()};
}

// the p chart is the same for every rho; rho only shifts the hidden p0
PointedOrbit<Gal3Element, Vec3> pointed_orbit_g3(double tau) {
  PointedOrbit<Gal3Element, Vec3> po;
  po.ops = group_ops3();
  po.base = {0, 0, 0};
  po.act = [tau](const Gal3Element& g, const Vec3& p) { return chart_act_g3(tau, g, p); };
  po.section = [tau](const Vec3& p) {
    return Gal3Element{SU2Element::identity(), (-1.0 / tau) * p, 0, {0, 0, 0}};
  };
  po.dist = [](const Vec3& a, const Vec3& b) { return chart_dist(a, b); };
  return po;
}

PointedOrbit<Gal2Element, Vec2> pointed_orbit_z1(const MultiplierParams& mp) {
  PointedOrbit<Gal2Element, Vec2> po;
  po.ops = group_ops2();
  po.base = {0, 0};
  po.act = [mp](const Gal2Element& g, const Vec2& p) { return chart_act_z1(mp, g, p); };
  po.section = [tau = mp.tau](const Vec2& p) {
    return Gal2Element{0, (-1.0 / tau) * p, 0, {0, 0}};
  };
  po.dist = [](const Vec2& a, const Vec2& b) { return chart_dist(a, b); };
  return po;
}

PointedOrbit<Gal2Element, MomentumPoint2> pointed_orbit_z2(const MultiplierParams& mp) {
  PointedOrbit<Gal2Element, MomentumPoint2> po;
  po.ops = group_ops2();
  po.base = {0, {0, 0}};
  po.act = [mp](const Gal2Element& g, const MomentumPoint2& pt) {
    return act_momentum2(mp, g, pt);
  };
  po.section = [mp](const MomentumPoint2& pt) {
    const double xc = (norm2(pt.p) / (2 * mp.tau) - pt.p0) / mp.S;
    return Gal2Element{xc, (-1.0 / mp.tau) * pt.p, 0, {0, 0}};
  };
  po.dist = [](const MomentumPoint2& a, const MomentumPoint2& b) { return chart_dist(a, b); };
  return po;
}

PointedOrbit<Gal2Element, ChartCyl> pointed_orbit_cyl(const MultiplierParams& mp, double r) {
  PointedOrbit<Gal2Element, ChartCyl> po;
  po.ops = group_ops2();
  po.base = {0, 0};
  po.act = [mp, r](const Gal2Element& g, const ChartCyl& c) { return chart_act_cyl(mp, r, g, c); };
  po.section = [mp, r](const ChartCyl& c) {
    const Vec2 p = cyl_to_momentum(r, c).p;
    const Vec2 v = (-(c.p0 + mp.S * c.theta) / (r * r)) * p;
    return Gal2Element{c.theta, v, 0, {0, 0}};
  };
  po.dist = [](const ChartCyl& a, const ChartCyl& b) { return chart_dist(a, b); };
  return po;
}

PointedOrbit<Gal2Element, double> pointed_orbit_line(const MultiplierParams& mp) {
  PointedOrbit<Gal2Element, double> po;
  po.ops = group_ops2();
  po.base = 0.0;
  po.act = [mp](const Gal2Element& g, const double& p0) { return chart_act_line(mp, g, p0); };
  po.section = [S = mp.S](const double& p0) {
    return Gal2Element{-p0 / S, {0, 0}, 0, {0, 0}};
  };
  po.dist = [](const double& a, const double& b) { return std::fabs(a - b); };
  return po;
}

// ---- stabilizer representations ---------------------------------------------

namespace {
[[noreturn]] void not_a_member(const char* who) {
  throw std::runtime_error(std::string(who) + ": element is not a stabilizer member (broken section?)");
}
}  // namespace

StabRep<Gal3Element> stab_rep_spin(int two_s) {
  return [two_s](const Gal3Element& h) -> UnitaryValue {
    const auto m = stabilizer_membership3(h);
    if (!m) not_a_member("stab_rep_spin");
    return MatrixOp{wigner_d(two_s, m->A)};
  };
}

StabRep<Gal2Element> stab_rep_angle(double s) {
  return [s](const Gal2Element& h) -> UnitaryValue {
    if (max_abs(h.v) > 1e-10 || std::fabs(h.eta) > 1e-10 || max_abs(h.a) > 1e-10)
      not_a_member("stab_rep_angle");
    return Phase{unit_phase(s * h.x)};
  };
}

StabRep<Gal2Element> stab_rep_trivial2(const OrbitClass2& orbit) {
  return [orbit](const Gal2Element& h) -> UnitaryValue {
    if (!stabilizer_membership(orbit, h)) not_a_member("stab_rep_trivial2");
    return Phase{1.0};
  };
}

StabRep<Gal2Element> stab_rep_torus_line(const OrbitClass2& orbit, double s, double t) {
  return [orbit, s, t](const Gal2Element& h) -> UnitaryValue {
    const auto m = stabilizer_membership(orbit, h);
    if (!m) not_a_member("stab_rep_torus_line");
    const auto& tl = std::get<TorusLine>(*m);
    return Phase{unit_phase(kTwoPi * s * static_cast<double>(tl.n) + t * tl.alpha)};
  };
}

StabRep<Gal2Element> stab_rep_dlambda(const OrbitClass2& orbit, double k, double lambda) {
  return [orbit, k, lambda](const Gal2Element& h) -> UnitaryValue {
    const auto m = stabilizer_membership(orbit, h);
    if (!m) not_a_member("stab_rep_dlambda");
    const auto& tl = std::get<TorusLine>(*m);
    return d_lambda_op(k, lambda, tl.n, tl.alpha);
  };
}

StabRep<Gal2Element> stab_rep_weyl(const OrbitClass2& orbit, double F) {
  return [orbit, F](const Gal2Element& h) -> UnitaryValue {
    const auto m = stabilizer_membership(orbit, h);
    if (!m) not_a_member("stab_rep_weyl");
    return WeylOp{1.0, std::get<BoostOnly>(*m).v, F};
  };
}

// ---- closed-form representations ----------------------------------------------

Wave3 apply_V3(const CaseG3& c, const Gal3Element& g, Wave3 f) {
  const Mat3 Rinv = su2_delta(g.A).transpose();
  const CMatrix D = wigner_d(c.two_s, g.A);
  return [c, g, Rinv, D, f = std::move(f)](const Vec3& p) {
    const double expo = 0.5 * c.tau * dot(g.v, g.a) +
                        g.eta * (norm2(p) - c.rho) / (2 * c.tau) + dot(p, g.a);
    auto val = D * f(Rinv * (p + c.tau * g.v));
    const complexd ph = unit_phase(expo);
    for (auto& e : val) e *= ph;
    return val;
  };
}

Wave3 apply_U3(const CaseG3& c, const Gal3Element& homog, Wave3 f) {
  const Mat3 Rinv = su2_delta(homog.A).transpose();
  const CMatrix D = wigner_d(c.two_s, homog.A);
  return [c, v = homog.v, Rinv, D, f = std::move(f)](const Vec3& p) {
    return D * f(Rinv * (p + c.tau * v));
  };
}

Wave3 apply_W3(const CaseG3& c, double eta, const Vec3& a, Wave3 f) {
  return [c, eta, a, f = std::move(f)](const Vec3& p) {
    auto val = f(p);
    const complexd ph = unit_phase((norm2(p) - c.rho) / (2 * c.tau) * eta + dot(p, a));
    for (auto& e : val) e *= ph;
    return val;
  };
}

WaveA2 apply_V2_caseA(const CaseA2& c, const Gal2Element& g, WaveA2 f) {
  const Mat2 Rinv = rot2_delta(-g.x);
  return [c, g, Rinv, f = std::move(f)](const Vec2& p) {
    const double eta_factor = c.verbatim_phase ? 1.0 : g.eta;
    const double expo = 0.5 * c.tau * dot(g.a, g.v) +
                        eta_factor * (norm2(p) - c.rho) / (2 * c.tau) + dot(g.a, p) +
                        0.5 * (c.F / c.tau) * symp(g.v, p) + c.s * g.x;
    return unit_phase(expo) * f(Rinv * (p + c.tau * g.v));
  };
}

WaveA2 apply_U2_caseA(const CaseA2& c, const Gal2Element& homog, WaveA2 f) {
  Gal2Element h = homog;
  h.eta = 0;
  h.a = {0, 0};
  return apply_V2_caseA(c, h, std::move(f));
}

WaveA2 apply_W2_caseA(const CaseA2& c, double eta, const Vec2& a, WaveA2 f) {
  return [c, eta, a, f = std::move(f)](const Vec2& p) {
    return unit_phase((norm2(p) - c.rho) / (2 * c.tau) * eta + dot(p, a)) * f(p);
  };
}

WaveB2 apply_V2_caseB(const CaseB2& c, const Gal2Element& g, WaveB2 f) {
  const Mat2 Rinv = rot2_delta(-g.x);
  return [c, g, Rinv, f = std::move(f)](const MomentumPoint2& pt) {
    const double expo = 0.5 * c.tau * dot(g.a, g.v) + dot(g.a, pt.p) +
                        0.5 * (c.F / c.tau) * symp(g.v, pt.p) + g.eta * (pt.p0 + c.S * g.x);
    const MomentumPoint2 arg{pt.p0 + dot(g.v, pt.p) + 0.5 * c.tau * norm2(g.v) + c.S * g.x,
                             Rinv * (pt.p + c.tau * g.v)};
    return unit_phase(expo) * f(arg);
  };
}

WaveB2 apply_U2_caseB(const CaseB2& c, const Gal2Element& homog, WaveB2 f) {
  Gal2Element h = homog;
  h.eta = 0;
  h.a = {0, 0};
  return apply_V2_caseB(c, h, std::move(f));
}

WaveB2 apply_W2_caseB(const CaseB2& c, double eta, const Vec2& a, WaveB2 f) {
  (void)c;
  return [eta, a, f = std::move(f)](const MomentumPoint2& pt) {
    return unit_phase(eta * pt.p0 + dot(a, pt.p)) * f(pt);
  };
}

// ---- induced systems -------------------------------------------------------

SystemC2i build_caseCi_system(const CaseC2i& c) {
  validate(c);
  SystemC2i sys;
  sys.c = c;
  const MultiplierParams mp{0, c.F, c.S};
  sys.orbit = {c.S == 0 ? OrbitFamily::Z3 : OrbitFamily::Z5, c.r, mp};
  sys.po = pointed_orbit_cyl(mp, c.r);
  const double s_mod = c.s - std::floor(c.s);
  sys.phi = canonical_cocycle<Gal2Element, ChartCyl>(
      stab_rep_torus_line(sys.orbit, s_mod, c.t), sys.po,
      [F = c.F](const Gal2Element& a, const Gal2Element& b) { return m_F(F, a, b); });
  return sys;
}

WaveCyl apply_U2_caseCi(const SystemC2i& sys, const Gal2Element& homog, WaveCyl f) {
  Gal2Element h = homog;
  h.eta = 0;
  h.a = {0, 0};
  return induced_scalar(sys.phi, sys.po, h, std::move(f));
}

WaveCyl apply_W2_cyl(double r, double eta, const Vec2& a, WaveCyl f) {
  return [r, eta, a, f = std::move(f)](const ChartCyl& x) {
    return unit_phase(eta * x.p0 + dot(a, cyl_to_momentum(r, x).p)) * f(x);
  };
}

WaveCyl apply_V2_caseCi(const SystemC2i& sys, const Gal2Element& g, WaveCyl f) {
  WaveCyl uf = apply_U2_caseCi(sys, g, std::move(f));
  WaveCyl wuf = apply_W2_cyl(sys.c.r, g.eta, g.a, std::move(uf));
  const complexd ph = unit_phase(sys.c.S * g.eta * g.x);
  return [ph, wuf = std::move(wuf)](const ChartCyl& x) { return ph * wuf(x); };
}

SystemC2ii build_caseCii_system(const CaseC2ii& c) {
  validate(c);
  SystemC2ii sys;
  sys.c = c;
  sys.k = kTwoPi * c.F * c.S / c.r;
  const MultiplierParams mp{0, c.F, c.S};
  sys.orbit = {OrbitFamily::Z5, c.r, mp};
  sys.po = pointed_orbit_cyl(mp, c.r);
  const double l_mod = c.lambda - std::floor(c.lambda);
  sys.phi = canonical_cocycle<Gal2Element, ChartCyl>(
      stab_rep_dlambda(sys.orbit, sys.k, l_mod), sys.po,
      [F = c.F](const Gal2Element& a, const Gal2Element& b) { return m_F(F, a, b); });
  return sys;
}

WaveCylT apply_U2_caseCii(const SystemC2ii& sys, const Gal2Element& homog, WaveCylT f) {
  Gal2Element h = homog;
  h.eta = 0;
  h.a = {0, 0};
  return induced_torus(sys.phi, sys.po, h, std::move(f));
}

WaveCylT apply_W2_cylt(double r, double eta, const Vec2& a, WaveCylT f) {
  return [r, eta, a, f = std::move(f)](const ChartCyl& x, const complexd& z) {
    return unit_phase(eta * x.p0 + dot(a, cyl_to_momentum(r, x).p)) * f(x, z);
  };
}

WaveCylT apply_V2_caseCii(const SystemC2ii& sys, const Gal2Element& g, WaveCylT f) {
  WaveCylT uf = apply_U2_caseCii(sys, g, std::move(f));
  WaveCylT wuf = apply_W2_cylt(sys.c.r, g.eta, g.a, std::move(uf));
  const complexd ph = unit_phase(sys.c.S * g.eta * g.x);
  return [ph, wuf = std::move(wuf)](const ChartCyl& x, const complexd& z) { return ph * wuf(x, z); };
}

SystemD2r0 build_caseDr0_system(const CaseD2r0& c) {
  validate(c);
  SystemD2r0 sys;
  sys.c = c;
  const MultiplierParams mp{0, c.F, c.S};
  sys.orbit = {OrbitFamily::Z5, 0, mp};
  sys.po = pointed_orbit_line(mp);
  sys.phi = canonical_cocycle<Gal2Element, double>(
      stab_rep_weyl(sys.orbit, c.F), sys.po,
      [F = c.F](const Gal2Element& a, const Gal2Element& b) { return m_F(F, a, b); });
  return sys;
}

WaveLineQ apply_U2_caseDr0(const SystemD2r0& sys, const Gal2Element& homog, WaveLineQ f) {
  Gal2Element h = homog;
  h.eta = 0;
  h.a = {0, 0};
  return induced_schro(sys.phi, sys.po, h, std::move(f));
}

WaveLineQ apply_V2_caseDr0(const SystemD2r0& sys, const Gal2Element& g, WaveLineQ f) {
  WaveLineQ uf = apply_U2_caseDr0(sys, g, std::move(f));
  const complexd ph = unit_phase(sys.c.S * g.eta * g.x);
  const double eta = g.eta;
  return [ph, eta, uf = std::move(uf)](const double& p0, double q) {
    return ph * unit_phase(eta * p0) * uf(p0, q);
  };
}

// ---- standalone families ------------------------------------------------------

TorusOp d_lambda_op(double k, double lambda, long long n, double alpha) {
  return TorusOp{unit_phase(k * (lambda - 0.5 * static_cast<double>(n)) * alpha), n,
                 unit_phase(-k * alpha)};
}

TorusFn apply_D_lambda(double k, double lambda, long long n, double alpha, TorusFn f) {
  const TorusOp op = d_lambda_op(k, lambda, n, alpha);
  return [op, f = std::move(f)](const complexd& z) {
    return op.phase * pow_int(z, op.power) * f(op.rot * z);
  };
}

SchroFn ccr_weyl(double F, const Vec2& v, SchroFn psi) {
  return [F, v, psi = std::move(psi)](double q) {
    return unit_phase(F * v.x * (q + 0.5 * v.y)) * psi(q + v.y);
  };
}

complexd circle_boost_phase(double F, double S, double r, const Gal2Element& h,
                            const MomentumPoint2& pt, bool verbatim) {
  if (r <= 0) throw std::invalid_argument("circle_boost_phase: requires r > 0");
  if (std::fabs(norm(pt.p) - r) > 1e-8)
    throw std::invalid_argument("circle_boost_phase: p is off the circle of radius r");
  const Vec2 P = rot2_delta(h.x) * pt.p;
  const double cp = angle_section(pt.p, r);
  const double cP = angle_section(P, r);
  const double bracket = dot(h.v, P) - 2 * pt.p0 + S * (cp + cP - h.x);
  const double expo = 0.5 * F / (r * r) * symp(P, h.v) * bracket;
  if (verbatim) return complexd(0, expo);
  return unit_phase(expo);
}

// ---- packets -------------------------------------------------------------------

WaveA2 packet2(const Vec2& mu, double sigma, const Vec2& kappa) {
  return [mu, sigma, kappa](const Vec2& p) {
    const Vec2 d = p - mu;
    return std::exp(complexd(-0.5 * norm2(d) / (sigma * sigma), dot(kappa, p)));
  };
}

WaveA2 packetA2(Rng& rng) {
  return packet2(rng.vec2(-1, 1), rng.uniform(0.7, 1.3), rng.vec2(-1.5, 1.5));
}

Wave3 packet3(int components, Rng& rng) {
  struct Part {
    Vec3 mu, kappa;
    double inv2s2;
  };
  std::vector<Part> parts;
  parts.reserve(components);
  for (int i = 0; i < components; ++i) {
    const double sigma = rng.uniform(0.7, 1.3);
    parts.push_back({rng.vec3(-1, 1), rng.vec3(-1.5, 1.5), 0.5 / (sigma * sigma)});
  }
  return [parts](const Vec3& p) {
    std::vector<complexd> out(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) {
      const Vec3 d = p - parts[i].mu;
      out[i] = std::exp(complexd(-parts[i].inv2s2 * norm2(d), dot(parts[i].kappa, p)));
    }
    return out;
  };
}

WaveB2 packetB2(Rng& rng) {
  const double mu0 = rng.uniform(-1, 1), k0 = rng.uniform(-1.5, 1.5);
  const Vec2 mu = rng.vec2(-1, 1), kappa = rng.vec2(-1.5, 1.5);
  const double sigma = rng.uniform(0.7, 1.3);
  return [=](const MomentumPoint2& pt) {
    const Vec2 d = pt.p - mu;
    const double dd = (pt.p0 - mu0) * (pt.p0 - mu0) + norm2(d);
    return std::exp(complexd(-0.5 * dd / (sigma * sigma), k0 * pt.p0 + dot(kappa, pt.p)));
  };
}

WaveCyl packet_cyl(Rng& rng) {
  const double mu0 = rng.uniform(-1, 1), k0 = rng.uniform(-1.5, 1.5);
  const double s2 = rng.uniform(0.7, 1.3);
  const double kc = rng.uniform(-1, 1), ks = rng.uniform(-1, 1);
  const double th0 = rng.uniform(0, kTwoPi);
  return [=](const ChartCyl& x) {
    const double d0 = x.p0 - mu0;
    return std::exp(complexd(-0.5 * d0 * d0 / (s2 * s2) + kc * std::cos(x.theta - th0),
                             k0 * x.p0 + ks * std::sin(x.theta - th0)));
  };
}

WaveCylT packet_cylt(Rng& rng) {
  WaveCyl base = packet_cyl(rng);
  std::array<complexd, 5> coeff;
  for (auto& cm : coeff) cm = complexd(rng.uniform(-1, 1), rng.uniform(-1, 1));
  return [base = std::move(base), coeff](const ChartCyl& x, const complexd& z) {
    complexd poly = 0;
    for (int m = -2; m <= 2; ++m) poly += coeff[m + 2] * pow_int(z, m);
    return base(x) * poly;
  };
}

WaveLineQ packet_lineq(Rng& rng) {
  const double mu0 = rng.uniform(-1, 1), k0 = rng.uniform(-1.5, 1.5);
  const double s0 = rng.uniform(0.7, 1.3);
  const double muq = rng.uniform(-1, 1), kq = rng.uniform(-1.5, 1.5);
  const double sq = rng.uniform(0.7, 1.3);
  return [=](const double& p0, double q) {
    const double d0 = p0 - mu0, dq = q - muq;
    return std::exp(complexd(-0.5 * d0 * d0 / (s0 * s0) - 0.5 * dq * dq / (sq * sq),
                             k0 * p0 + kq * q));
  };
}

}  // namespace galrep
