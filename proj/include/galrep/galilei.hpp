#pragma once
#include <array>

#include "galrep/linalg.hpp"

namespace galrep {

// Unit quaternion model of SU(2). The associated matrix is
//   [[w - i z, -y - i x], [y - i x, w + i z]]
// which is unitary with determinant one; quaternion multiplication matches
// matrix multiplication under this identification.
struct SU2Element {
  double w = 1, x = 0, y = 0, z = 0;

  static SU2Element identity() { return {}; }
  SU2Element conjugate() const { return {w, -x, -y, -z}; }
  double norm() const { return std::sqrt(w * w + x * x + y * y + z * z); }
  void renormalize() {
    const double n = norm();
    w /= n; x /= n; y /= n; z /= n;
  }
  SU2Element operator*(const SU2Element& o) const {
    SU2Element r{w * o.w - x * o.x - y * o.y - z * o.z,
                 w * o.x + x * o.w + y * o.z - z * o.y,
                 w * o.y - x * o.z + y * o.w + z * o.x,
                 w * o.z + x * o.y - y * o.x + z * o.w};
    r.renormalize();  // drift guard for long products
    return r;
  }
  SU2Element operator-() const { return {-w, -x, -y, -z}; }

  // 2x2 complex matrix, row-major
  std::array<complexd, 4> matrix() const {
    return {complexd(w, -z), complexd(-y, -x), complexd(y, -x), complexd(w, z)};
  }
};

inline double max_abs_diff(const SU2Element& a, const SU2Element& b) {
  return std::max(std::max(std::fabs(a.w - b.w), std::fabs(a.x - b.x)),
                  std::max(std::fabs(a.y - b.y), std::fabs(a.z - b.z)));
}

// covering map SU(2) -> SO(3), [delta(A) x] = A [x] A*
Mat3 su2_delta(const SU2Element& A);

// covering map R -> SO(2); this is the clockwise convention
// [[cos x, sin x], [-sin x, cos x]] used throughout the 1+2 formulas.
Mat2 rot2_delta(double x);

// Galilei covering-group element in 1+3 dimensions: (A, v, eta, a)
struct Gal3Element {
  SU2Element A;
  Vec3 v;
  double eta = 0;
  Vec3 a;
  static Gal3Element identity() { return {}; }
};

// Galilei covering-group element in 1+2 dimensions: (x, v, eta, a).
// x lives on the whole real line (never reduced mod 2*pi) so the covering
// kernel 2*pi*Z is represented exactly.
struct Gal2Element {
  double x = 0;
  Vec2 v;
  double eta = 0;
  Vec2 a;
  static Gal2Element identity() { return {}; }
};

Gal3Element compose3(const Gal3Element& g1, const Gal3Element& g2);
Gal3Element inverse3(const Gal3Element& g);
Gal2Element compose2(const Gal2Element& g1, const Gal2Element& g2);
Gal2Element inverse2(const Gal2Element& g);

// overload set used by generic code
inline Gal3Element compose(const Gal3Element& g1, const Gal3Element& g2) { return compose3(g1, g2); }
inline Gal2Element compose(const Gal2Element& g1, const Gal2Element& g2) { return compose2(g1, g2); }
inline Gal3Element inverse(const Gal3Element& g) { return inverse3(g); }
inline Gal2Element inverse(const Gal2Element& g) { return inverse2(g); }

double max_abs_diff(const Gal3Element& a, const Gal3Element& b);
double max_abs_diff(const Gal2Element& a, const Gal2Element& b);

struct SpacetimePoint2 {
  double T = 0;
  Vec2 X;
};
struct SpacetimePoint3 {
  double T = 0;
  Vec3 X;
};

// (R, v, eta, a) . (T, X) = (T + eta, R X + T v + a)
SpacetimePoint2 act_spacetime(const Gal2Element& g, const SpacetimePoint2& p);
SpacetimePoint3 act_spacetime(const Gal3Element& g, const SpacetimePoint3& p);

}  // namespace galrep
