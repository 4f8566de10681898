#pragma once
#include <stdexcept>

#include "galrep/galilei.hpp"

namespace galrep {

using UnitPhase = complexd;

// cohomology-class parameters of a multiplier: tau alone in 1+3,
// (tau, F, S) in 1+2
struct MultiplierParams {
  double tau = 0, F = 0, S = 0;
};

// antisymmetric form <u,v> = u^t A v with A = [[0,1],[-1,0]]
inline double symp(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

// A u for the same matrix A
inline Vec2 symp_apply(const Vec2& u) { return {u.y, -u.x}; }

// m_tau(r1, r2) = exp{ i tau/2 [a1.d(A1)v2 - v1.d(A1)a2 + eta2 v1.d(A1)v2] }
UnitPhase m_tau(double tau, const Gal3Element& r1, const Gal3Element& r2);

// m_{tau,F,S}(r1, r2) = (tau bracket) * exp{ i F/2 <v1, d(x1)v2> + i S eta1 x2 }
UnitPhase m_tfs(const MultiplierParams& p, const Gal2Element& r1, const Gal2Element& r2);

// m_F = m_{0,F,0}; the multiplier carried by the homogeneous subgroup
inline UnitPhase m_F(double F, const Gal2Element& r1, const Gal2Element& r2) {
  return m_tfs({0, F, 0}, r1, r2);
}

// Lie algebra element (alpha, u, t, x) of the 1+2 covering group
struct LieElement2 {
  double alpha = 0;
  Vec2 u;
  double t = 0;
  Vec2 x;
};

LieElement2 lie_bracket(const LieElement2& X1, const LieElement2& X2);

enum class LieCocycle { Xi0, Xi1, Xi2 };

// xi0 = x1.u2 - x2.u1, xi1 = <u1,u2>/2, xi2 = alpha1 t2 - alpha2 t1
double lie_cocycle(LieCocycle which, const LieElement2& X1, const LieElement2& X2);

// |m(g1,g2) m(g1 g2, g3) - m(g1, g2 g3) m(g2, g3)|
template <class G, class M>
double check_multiplier_identity(M&& m, const G& g1, const G& g2, const G& g3) {
  return std::abs(m(g1, g2) * m(compose(g1, g2), g3) - m(g1, compose(g2, g3)) * m(g2, g3));
}

// restriction of m_F to the circle-orbit stabilizer in (n, alpha) coordinates:
// exp{ i k/2 (alpha1 n2 - alpha2 n1) } with k = 2 pi F S / r
UnitPhase m_restricted_stabilizer(const MultiplierParams& p, double r, long long n1, double alpha1,
                                  long long n2, double alpha2);

}  // namespace galrep
