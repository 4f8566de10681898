#include "galrep/galilei.hpp"

namespace galrep {

Mat3 su2_delta(const SU2Element& q) {
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Mat3 r;
  r.a[0][0] = 1 - 2 * (y * y + z * z);
  r.a[0][1] = 2 * (x * y - w * z);
  r.a[0][2] = 2 * (x * z + w * y);
  r.a[1][0] = 2 * (x * y + w * z);
  r.a[1][1] = 1 - 2 * (x * x + z * z);
  r.a[1][2] = 2 * (y * z - w * x);
  r.a[2][0] = 2 * (x * z - w * y);
  r.a[2][1] = 2 * (y * z + w * x);
  r.a[2][2] = 1 - 2 * (x * x + y * y);
  return r;
}

Mat2 rot2_delta(double x) {
  const double c = std::cos(x), s = std::sin(x);
  return {c, s, -s, c};
}

Gal3Element compose3(const Gal3Element& g1, const Gal3Element& g2) {
  const Mat3 R1 = su2_delta(g1.A);
  return {g1.A * g2.A, g1.v + R1 * g2.v, g1.eta + g2.eta, g1.a + R1 * g2.a + g2.eta * g1.v};
}

Gal3Element inverse3(const Gal3Element& g) {
  const SU2Element Ai = g.A.conjugate();
  const Mat3 Ri = su2_delta(Ai);
  return {Ai, -(Ri * g.v), -g.eta, -(Ri * (g.a - g.eta * g.v))};
}

Gal2Element compose2(const Gal2Element& g1, const Gal2Element& g2) {
  const Mat2 R1 = rot2_delta(g1.x);
  return {g1.x + g2.x, g1.v + R1 * g2.v, g1.eta + g2.eta, g1.a + R1 * g2.a + g2.eta * g1.v};
}

Gal2Element inverse2(const Gal2Element& g) {
  const Mat2 Ri = rot2_delta(-g.x);
  return {-g.x, -(Ri * g.v), -g.eta, -(Ri * (g.a - g.eta * g.v))};
}

double max_abs_diff(const Gal3Element& a, const Gal3Element& b) {
  double m = max_abs_diff(a.A, b.A);
  m = std::max(m, max_abs(a.v - b.v));
  m = std::max(m, std::fabs(a.eta - b.eta));
  m = std::max(m, max_abs(a.a - b.a));
  return m;
}

double max_abs_diff(const Gal2Element& a, const Gal2Element& b) {
  double m = std::fabs(a.x - b.x);
  m = std::max(m, max_abs(a.v - b.v));
  m = std::max(m, std::fabs(a.eta - b.eta));
  m = std::max(m, max_abs(a.a - b.a));
  return m;
}

SpacetimePoint2 act_spacetime(const Gal2Element& g, const SpacetimePoint2& p) {
  return {p.T + g.eta, rot2_delta(g.x) * p.X + p.T * g.v + g.a};
}

SpacetimePoint3 act_spacetime(const Gal3Element& g, const SpacetimePoint3& p) {
  return {p.T + g.eta, su2_delta(g.A) * p.X + p.T * g.v + g.a};
}

}  // namespace galrep
