#include "galrep/orbits.hpp"

namespace galrep {

namespace {
constexpr double kFixTol = 1e-10;     // stabilizer membership
constexpr double kOrbitTol = 1e-8;    // cross-section precondition
}  // namespace

MomentumPoint3 act_momentum3(double tau, const Gal3Element& h, const MomentumPoint3& pt) {
  const Mat3 R = su2_delta(h.A);
  const Vec3 Rp = R * pt.p;
  return {pt.p0 + 0.5 * tau * norm2(h.v) - dot(h.v, Rp), Rp - tau * h.v};
}

MomentumPoint2 act_momentum2(const MultiplierParams& params, const Gal2Element& h,
                             const MomentumPoint2& pt) {
  const Mat2 R = rot2_delta(h.x);
  const Vec2 Rp = R * pt.p;
  return {pt.p0 - dot(h.v, Rp) + 0.5 * params.tau * norm2(h.v) - params.S * h.x, Rp - params.tau * h.v};
}

std::string family_name(OrbitFamily f) {
  switch (f) {
    case OrbitFamily::Z1: return "Z1";
    case OrbitFamily::Z2: return "Z2";
    case OrbitFamily::Z3: return "Z3";
    case OrbitFamily::Z4: return "Z4";
    case OrbitFamily::Z5: return "Z5";
  }
  return "?";
}

OrbitClass2 classify_orbit2(const MultiplierParams& params, const MomentumPoint2& pt) {
  OrbitClass2 o;
  o.params = params;
  const bool tau0 = params.tau == 0.0;
  const bool S0 = params.S == 0.0;
  if (!tau0 && S0) {
    o.family = OrbitFamily::Z1;
    o.invariant = rho_invariant(params.tau, pt);
  } else if (!tau0 && !S0) {
    o.family = OrbitFamily::Z2;
    o.invariant = 0;
  } else if (tau0 && S0) {
    const double r = norm(pt.p);
    if (r == 0.0) {
      o.family = OrbitFamily::Z4;
      o.invariant = pt.p0;
    } else {
      o.family = OrbitFamily::Z3;
      o.invariant = r;
    }
  } else {
    o.family = OrbitFamily::Z5;
    o.invariant = norm(pt.p);
  }
  return o;
}

MomentumPoint2 base_point(const OrbitClass2& orbit) {
  switch (orbit.family) {
    case OrbitFamily::Z1:
      return {-orbit.invariant / (2 * orbit.params.tau), {0, 0}};
    case OrbitFamily::Z2:
      return {0, {0, 0}};
    case OrbitFamily::Z3:
    case OrbitFamily::Z5:
      return {0, {orbit.invariant, 0}};  // [0, r e1]; r = 0 degenerates to [0, 0]
    case OrbitFamily::Z4:
      return {orbit.invariant, {0, 0}};
  }
  return {};
}

MomentumPoint3 base_point3(double tau, double rho) {
  if (tau == 0) throw std::invalid_argument("base_point3: requires tau != 0");
  return {-rho / (2 * tau), {0, 0, 0}};
}

std::optional<StabilizerElement> stabilizer_membership(const OrbitClass2& orbit,
                                                       const Gal2Element& h) {
  if (std::fabs(h.eta) > kFixTol || max_abs(h.a) > kFixTol) return std::nullopt;
  const MomentumPoint2 base = base_point(orbit);
  if (max_abs_diff(act_momentum2(orbit.params, h, base), base) > kFixTol) return std::nullopt;
  switch (orbit.family) {
    case OrbitFamily::Z1:
      return StabilizerElement{AngleOnly{h.x}};
    case OrbitFamily::Z2:
      return StabilizerElement{FullElement{Gal2Element::identity()}};
    case OrbitFamily::Z4:
      return StabilizerElement{FullElement{h}};
    case OrbitFamily::Z3:
    case OrbitFamily::Z5: {
      if (orbit.invariant == 0.0)  // Z5 with r = 0: boosts only
        return StabilizerElement{BoostOnly{h.v}};
      const long long n = std::llround(h.x / kTwoPi);
      return StabilizerElement{TorusLine{n, h.v.y}};
    }
  }
  return std::nullopt;
}

std::optional<RotOnly3> stabilizer_membership3(const Gal3Element& h) {
  if (max_abs(h.v) > kFixTol || std::fabs(h.eta) > kFixTol || max_abs(h.a) > kFixTol)
    return std::nullopt;
  return RotOnly3{h.A};
}

Gal2Element embed_torus_line(const OrbitClass2& orbit, long long n, double alpha) {
  const double r = orbit.invariant;
  if (r <= 0) throw std::invalid_argument("embed_torus_line: requires r > 0");
  const double nd = static_cast<double>(n);
  return {kTwoPi * nd, {-kTwoPi * nd * orbit.params.S / r, alpha}, 0, {0, 0}};
}

Gal2Element cross_section(const OrbitClass2& orbit, const MomentumPoint2& pt) {
  const MultiplierParams& mp = orbit.params;
  switch (orbit.family) {
    case OrbitFamily::Z1: {
      if (std::fabs(rho_invariant(mp.tau, pt) - orbit.invariant) > kOrbitTol)
        throw std::invalid_argument("cross_section: point is off the Z1 orbit");
      return {0, (-1.0 / mp.tau) * pt.p, 0, {0, 0}};
    }
    case OrbitFamily::Z2: {
      const double xc = (norm2(pt.p) / (2 * mp.tau) - pt.p0) / mp.S;
      return {xc, (-1.0 / mp.tau) * pt.p, 0, {0, 0}};
    }
    case OrbitFamily::Z3:
    case OrbitFamily::Z5: {
      const double r = orbit.invariant;
      if (r == 0.0) {  // Z5 with r = 0: p must vanish
        if (max_abs(pt.p) > kOrbitTol)
          throw std::invalid_argument("cross_section: point is off the r = 0 orbit");
        return {-pt.p0 / mp.S, {0, 0}, 0, {0, 0}};
      }
      if (std::fabs(norm(pt.p) - r) > kOrbitTol)
        throw std::invalid_argument("cross_section: point is off the circle orbit");
      const double cp = angle_section(pt.p, r);
      const Vec2 v = (-(pt.p0 + mp.S * cp) / (r * r)) * pt.p;
      return {cp, v, 0, {0, 0}};
    }
    case OrbitFamily::Z4: {
      if (max_abs(pt.p) > kOrbitTol || std::fabs(pt.p0 - orbit.invariant) > kOrbitTol)
        throw std::invalid_argument("cross_section: point is off the trivial orbit");
      return Gal2Element::identity();
    }
  }
  return Gal2Element::identity();
}

Gal3Element cross_section3(double tau, double rho, const MomentumPoint3& pt) {
  if (tau == 0) throw std::invalid_argument("cross_section3: requires tau != 0");
  if (std::fabs(rho_invariant(tau, pt) - rho) > kOrbitTol)
    throw std::invalid_argument("cross_section3: point is off the orbit");
  return {SU2Element::identity(), (-1.0 / tau) * pt.p, 0, {0, 0, 0}};
}

double angle_section(const Vec2& p, double r) {
  if (p.x == 0 && p.y == 0) throw std::invalid_argument("angle_section: p = 0");
  if (std::fabs(norm(p) - r) > kOrbitTol)
    throw std::invalid_argument("angle_section: |p| != r");
  // d(c) e1 = (cos c, -sin c)
  return wrap_angle(std::atan2(-p.y, p.x));
}

Vec3 chart_act_g3(double tau, const Gal3Element& h, const Vec3& p) {
  return su2_delta(h.A) * p - tau * h.v;
}

Vec2 chart_act_z1(const MultiplierParams& params, const Gal2Element& h, const Vec2& p) {
  return rot2_delta(h.x) * p - params.tau * h.v;
}

MomentumPoint2 chart_act_z2(const MultiplierParams& params, const Gal2Element& h,
                            const MomentumPoint2& pt) {
  return act_momentum2(params, h, pt);
}

ChartCyl chart_act_cyl(const MultiplierParams& params, double r, const Gal2Element& h,
                       const ChartCyl& c) {
  const Vec2 p = cyl_to_momentum(r, c).p;
  const double p0p = c.p0 - dot(h.v, rot2_delta(h.x) * p) - params.S * h.x;
  return {p0p, wrap_angle(c.theta + h.x)};
}

double chart_act_line(const MultiplierParams& params, const Gal2Element& h, double p0) {
  return p0 - params.S * h.x;
}

}  // namespace galrep
