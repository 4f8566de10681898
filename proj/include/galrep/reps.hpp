#pragma once
#include "galrep/mackey.hpp"
#include "galrep/orbits.hpp"
#include "galrep/rng.hpp"
#include "galrep/wigner.hpp"

namespace galrep {

// ---- wavefunction aliases per catalogue entry ----------------------------
using Wave3 = VecWave<Vec3>;                 // C^{2s+1}-valued on the p chart
using WaveA2 = ScalarWave<Vec2>;             // scalar on the p chart
using WaveB2 = ScalarWave<MomentumPoint2>;   // scalar on the (p0, p) chart
using WaveCyl = ScalarWave<ChartCyl>;        // scalar on the (p0, theta) chart
using WaveCylT = TorusWave<ChartCyl>;        // (p0, theta, z)
using WaveLineQ = SchroWave<double>;         // (p0, q)
using TorusFn = std::function<complexd(const complexd&)>;
using SchroFn = std::function<complexd(double)>;

// ---- catalogue parameters -------------------------------------------------
// Gates are checked by the validate() overloads; violations throw
// std::invalid_argument naming the gate.

struct CaseG3 {
  double tau = 1;
  int two_s = 1;  // spin s = two_s / 2
  double rho = 0;
};
struct CaseA2 {  // tau != 0, S = 0
  double tau = 1;
  double F = 0;
  double s = 0;
  double rho = 0;
  bool verbatim_phase = false;  // reproduce the uncorrected legacy phase (fails the law)
};
struct CaseB2 {  // tau != 0, S != 0
  double tau = 1;
  double F = 0;
  double S = 1;
};
struct CaseC2i {  // tau = 0, r > 0, k = 2 pi F S / r = 0
  double F = 1;
  double S = 0;
  double r = kTwoPi;
  double s = 0;  // mod 1
  double t = 0;
};
struct CaseC2ii {  // tau = 0, r > 0, k != 0
  double F = 1;
  double S = 1;
  double r = kTwoPi;
  double lambda = 0;  // mod 1
};
struct CaseD2r0 {  // tau = 0, S != 0, F != 0, orbit r = 0
  double F = 1;
  double S = 1;
};

void validate(const CaseG3& c);
void validate(const CaseA2& c);
void validate(const CaseB2& c);
void validate(const CaseC2i& c);
void validate(const CaseC2ii& c);
void validate(const CaseD2r0& c);

// ---- group ops and pointed orbits ----------------------------------------
GroupOps<Gal2Element> group_ops2();
GroupOps<Gal3Element> group_ops3();

PointedOrbit<Gal3Element, Vec3> pointed_orbit_g3(double tau);
PointedOrbit<Gal2Element, Vec2> pointed_orbit_z1(const MultiplierParams& mp);
PointedOrbit<Gal2Element, MomentumPoint2> pointed_orbit_z2(const MultiplierParams& mp);
PointedOrbit<Gal2Element, ChartCyl> pointed_orbit_cyl(const MultiplierParams& mp, double r);
PointedOrbit<Gal2Element, double> pointed_orbit_line(const MultiplierParams& mp);

// ---- stabilizer representations -------------------------------------------
StabRep<Gal3Element> stab_rep_spin(int two_s);                        // D^(s)(A)
StabRep<Gal2Element> stab_rep_angle(double s);                        // e^{i s x}
StabRep<Gal2Element> stab_rep_trivial2(const OrbitClass2& orbit);     // 1 on {e}
StabRep<Gal2Element> stab_rep_torus_line(const OrbitClass2& orbit, double s,
                                         double t);                   // e^{2 pi i s n} e^{i t alpha}
StabRep<Gal2Element> stab_rep_dlambda(const OrbitClass2& orbit, double k,
                                      double lambda);                 // D^(lambda) torus operator
StabRep<Gal2Element> stab_rep_weyl(const OrbitClass2& orbit, double F);  // pi^CCR_v

// ---- closed-form representations (tau != 0 families) ----------------------
Wave3 apply_V3(const CaseG3& c, const Gal3Element& g, Wave3 f);
Wave3 apply_U3(const CaseG3& c, const Gal3Element& homog, Wave3 f);
Wave3 apply_W3(const CaseG3& c, double eta, const Vec3& a, Wave3 f);

WaveA2 apply_V2_caseA(const CaseA2& c, const Gal2Element& g, WaveA2 f);
WaveA2 apply_U2_caseA(const CaseA2& c, const Gal2Element& homog, WaveA2 f);
WaveA2 apply_W2_caseA(const CaseA2& c, double eta, const Vec2& a, WaveA2 f);

WaveB2 apply_V2_caseB(const CaseB2& c, const Gal2Element& g, WaveB2 f);
WaveB2 apply_U2_caseB(const CaseB2& c, const Gal2Element& homog, WaveB2 f);
WaveB2 apply_W2_caseB(const CaseB2& c, double eta, const Vec2& a, WaveB2 f);

// ---- induced systems (tau = 0 families) ------------------------------------
// Built through the canonical cocycle; the rotation action on the fiber is
// whatever the induction machinery produces, which is what closes the group
// law (the bare boost formulas alone do not, for x outside 2 pi Z).

struct SystemC2i {
  CaseC2i c;
  OrbitClass2 orbit;
  PointedOrbit<Gal2Element, ChartCyl> po;
  CocycleFn<Gal2Element, ChartCyl> phi;
};
SystemC2i build_caseCi_system(const CaseC2i& c);
WaveCyl apply_U2_caseCi(const SystemC2i& sys, const Gal2Element& homog, WaveCyl f);
WaveCyl apply_V2_caseCi(const SystemC2i& sys, const Gal2Element& g, WaveCyl f);
WaveCyl apply_W2_cyl(double r, double eta, const Vec2& a, WaveCyl f);

struct SystemC2ii {
  CaseC2ii c;
  double k = 0;
  OrbitClass2 orbit;
  PointedOrbit<Gal2Element, ChartCyl> po;
  CocycleFn<Gal2Element, ChartCyl> phi;
};
SystemC2ii build_caseCii_system(const CaseC2ii& c);
WaveCylT apply_U2_caseCii(const SystemC2ii& sys, const Gal2Element& homog, WaveCylT f);
WaveCylT apply_V2_caseCii(const SystemC2ii& sys, const Gal2Element& g, WaveCylT f);
WaveCylT apply_W2_cylt(double r, double eta, const Vec2& a, WaveCylT f);

struct SystemD2r0 {
  CaseD2r0 c;
  OrbitClass2 orbit;
  PointedOrbit<Gal2Element, double> po;
  CocycleFn<Gal2Element, double> phi;
};
SystemD2r0 build_caseDr0_system(const CaseD2r0& c);
WaveLineQ apply_U2_caseDr0(const SystemD2r0& sys, const Gal2Element& homog, WaveLineQ f);
WaveLineQ apply_V2_caseDr0(const SystemD2r0& sys, const Gal2Element& g, WaveLineQ f);

// ---- standalone operator families ------------------------------------------

// torus representation (D^(lambda)_{n,alpha} f)(z) = e^{ik(lambda - n/2) alpha} z^n f(e^{-ik alpha} z)
TorusOp d_lambda_op(double k, double lambda, long long n, double alpha);
TorusFn apply_D_lambda(double k, double lambda, long long n, double alpha, TorusFn f);

// Weyl operator (pi_v psi)(q) = e^{i F v1 (q + v2/2)} psi(q + v2);
// satisfies pi_{v} pi_{w} = e^{-i F <v,w>/2} pi_{v+w}
SchroFn ccr_weyl(double F, const Vec2& v, SchroFn psi);

// boost-dependent unit phase of the circle-orbit cocycles:
//   Phi = exp{ i F/(2 r^2) <d(x)p, v> [ v.d(x)p - 2 p0 + S (c_p + c_{d(x)p} - x) ] }
// With verbatim = true the un-exponentiated bracket is returned instead
// (the uncorrected legacy form; not a unit phase).
complexd circle_boost_phase(double F, double S, double r, const Gal2Element& h,
                            const MomentumPoint2& pt, bool verbatim = false);

// turns an m_{tau,0,S}-representation evaluator into an m_{tau,F,S} one by
// the substitution a -> a - F/(2 tau) A v
template <class Apply>
auto f_shift_transform(Apply apply, double F, double tau) {
  return [apply = std::move(apply), F, tau](const Gal2Element& g, auto f) {
    Gal2Element gs = g;
    gs.a = gs.a - (F / (2 * tau)) * symp_apply(g.v);
    return apply(gs, std::move(f));
  };
}

// ---- deterministic test-function library -----------------------------------
WaveA2 packet2(const Vec2& mu, double sigma, const Vec2& kappa);
Wave3 packet3(int components, Rng& rng);
WaveB2 packetB2(Rng& rng);
WaveA2 packetA2(Rng& rng);
WaveCyl packet_cyl(Rng& rng);
WaveCylT packet_cylt(Rng& rng);
WaveLineQ packet_lineq(Rng& rng);

}  // namespace galrep
