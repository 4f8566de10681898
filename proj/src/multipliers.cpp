#include "galrep/multipliers.hpp"

namespace galrep {

UnitPhase m_tau(double tau, const Gal3Element& r1, const Gal3Element& r2) {
  const Mat3 R1 = su2_delta(r1.A);
  const double bracket =
      dot(r1.a, R1 * r2.v) - dot(r1.v, R1 * r2.a) + r2.eta * dot(r1.v, R1 * r2.v);
  return unit_phase(0.5 * tau * bracket);
}

UnitPhase m_tfs(const MultiplierParams& p, const Gal2Element& r1, const Gal2Element& r2) {
  const Mat2 R1 = rot2_delta(r1.x);
  const double bracket =
      dot(r1.a, R1 * r2.v) - dot(r1.v, R1 * r2.a) + r2.eta * dot(r1.v, R1 * r2.v);
  const double exponent =
      0.5 * p.tau * bracket + 0.5 * p.F * symp(r1.v, R1 * r2.v) + p.S * r1.eta * r2.x;
  return unit_phase(exponent);
}

LieElement2 lie_bracket(const LieElement2& X1, const LieElement2& X2) {
  LieElement2 r;
  r.u = symp_apply(X1.alpha * X2.u - X2.alpha * X1.u);
  r.x = symp_apply(X1.alpha * X2.x - X2.alpha * X1.x) + X2.t * X1.u - X1.t * X2.u;
  return r;
}

double lie_cocycle(LieCocycle which, const LieElement2& X1, const LieElement2& X2) {
  switch (which) {
    case LieCocycle::Xi0:
      return dot(X1.x, X2.u) - dot(X2.x, X1.u);
    case LieCocycle::Xi1:
      return 0.5 * symp(X1.u, X2.u);
    case LieCocycle::Xi2:
      return X1.alpha * X2.t - X2.alpha * X1.t;
  }
  return 0;
}

UnitPhase m_restricted_stabilizer(const MultiplierParams& p, double r, long long n1, double alpha1,
                                  long long n2, double alpha2) {
  if (r <= 0) throw std::invalid_argument("m_restricted_stabilizer: requires r > 0");
  const double k = kTwoPi * p.F * p.S / r;
  return unit_phase(0.5 * k * (alpha1 * static_cast<double>(n2) - alpha2 * static_cast<double>(n1)));
}

}  // namespace galrep
