#pragma once
#include <optional>
#include <string>
#include <variant>

#include "galrep/multipliers.hpp"

namespace galrep {

struct MomentumPoint2 {
  double p0 = 0;
  Vec2 p;
};
struct MomentumPoint3 {
  double p0 = 0;
  Vec3 p;
};

inline double max_abs_diff(const MomentumPoint2& a, const MomentumPoint2& b) {
  return std::max(std::fabs(a.p0 - b.p0), max_abs(a.p - b.p));
}
inline double max_abs_diff(const MomentumPoint3& a, const MomentumPoint3& b) {
  return std::max(std::fabs(a.p0 - b.p0), max_abs(a.p - b.p));
}

// dual-space actions; only the (rotation, boost) part of the group element acts
// (A,v).[p0,p] = [p0 + tau v^2/2 - v.d(A)p, d(A)p - tau v]
MomentumPoint3 act_momentum3(double tau, const Gal3Element& h, const MomentumPoint3& pt);
// (x,v).[p0,p] = [p0 - v.d(x)p + tau v^2/2 - S x, d(x)p - tau v]
MomentumPoint2 act_momentum2(const MultiplierParams& params, const Gal2Element& h,
                             const MomentumPoint2& pt);

// orbit invariant rho = p^2 - 2 tau p0
inline double rho_invariant(double tau, const MomentumPoint2& pt) {
  return norm2(pt.p) - 2 * tau * pt.p0;
}
inline double rho_invariant(double tau, const MomentumPoint3& pt) {
  return norm2(pt.p) - 2 * tau * pt.p0;
}

enum class OrbitFamily { Z1, Z2, Z3, Z4, Z5 };

std::string family_name(OrbitFamily f);

// classified orbit of the 1+2 dual action, together with the multiplier
// parameters that generated the action. `invariant` holds rho (Z1), r (Z3/Z5)
// or p0 (Z4); it is unused for Z2.
struct OrbitClass2 {
  OrbitFamily family = OrbitFamily::Z2;
  double invariant = 0;
  MultiplierParams params;
};

OrbitClass2 classify_orbit2(const MultiplierParams& params, const MomentumPoint2& pt);

MomentumPoint2 base_point(const OrbitClass2& orbit);
MomentumPoint3 base_point3(double tau, double rho);

// canonical stabilizer coordinates
struct RotOnly3 {
  SU2Element A;
};
struct AngleOnly {
  double x = 0;
};
struct TorusLine {
  long long n = 0;
  double alpha = 0;
};
struct BoostOnly {
  Vec2 v;
};
struct FullElement {
  Gal2Element g;
};
using StabilizerElement = std::variant<RotOnly3, AngleOnly, TorusLine, BoostOnly, FullElement>;

// coordinates iff h fixes the orbit base point (within 1e-10); h must be a
// homogeneous element (eta = a = 0)
std::optional<StabilizerElement> stabilizer_membership(const OrbitClass2& orbit,
                                                       const Gal2Element& h);
std::optional<RotOnly3> stabilizer_membership3(const Gal3Element& h);

// the embedded group element for circle-orbit coordinates:
// (n, alpha) -> (2 pi n, -2 pi n S / r e1 + alpha e2)
Gal2Element embed_torus_line(const OrbitClass2& orbit, long long n, double alpha);

// Borel cross sections, normalized to the identity at the base point;
// act(cross_section(pt), base) = pt. Throws if pt is off the orbit
// (invariant mismatch beyond 1e-8).
Gal2Element cross_section(const OrbitClass2& orbit, const MomentumPoint2& pt);
Gal3Element cross_section3(double tau, double rho, const MomentumPoint3& pt);

// angle c in [0, 2 pi) with d(c) e1 = p / r; throws on p = 0
double angle_section(const Vec2& p, double r);

// ---- orbit charts -------------------------------------------------------
//
// Z1 and the 1+3 orbit are charted by p alone; Z2 by (p0, p); Z3/Z5 (r > 0)
// by (p0, theta) with p = r d(theta) e1; Z4 and Z5 (r = 0) by p0.

struct ChartCyl {
  double p0 = 0;
  double theta = 0;  // in [0, 2 pi)
};

inline MomentumPoint2 cyl_to_momentum(double r, const ChartCyl& c) {
  return {c.p0, {r * std::cos(c.theta), -r * std::sin(c.theta)}};
}

Vec3 chart_act_g3(double tau, const Gal3Element& h, const Vec3& p);
Vec2 chart_act_z1(const MultiplierParams& params, const Gal2Element& h, const Vec2& p);
MomentumPoint2 chart_act_z2(const MultiplierParams& params, const Gal2Element& h,
                            const MomentumPoint2& pt);
ChartCyl chart_act_cyl(const MultiplierParams& params, double r, const Gal2Element& h,
                       const ChartCyl& c);
double chart_act_line(const MultiplierParams& params, const Gal2Element& h, double p0);

inline double chart_dist(const Vec2& a, const Vec2& b) { return max_abs(a - b); }
inline double chart_dist(const Vec3& a, const Vec3& b) { return max_abs(a - b); }
inline double chart_dist(const MomentumPoint2& a, const MomentumPoint2& b) {
  return max_abs_diff(a, b);
}
inline double chart_dist(const ChartCyl& a, const ChartCyl& b) {
  return std::max(std::fabs(a.p0 - b.p0), std::fabs(wrap_to_pi(a.theta - b.theta)));
}
inline double chart_dist(double a, double b) { return std::fabs(a - b); }

}  // namespace galrep
