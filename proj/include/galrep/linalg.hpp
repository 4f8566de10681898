#pragma once
#include <array>
#include <cmath>
#include <complex>

namespace galrep {

using complexd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// phase from a real exponent; keeps |result| = 1 to machine precision
inline complexd unit_phase(double theta) { return {std::cos(theta), std::sin(theta)}; }

struct Vec2 {
  double x = 0, y = 0;
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
};
inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double norm2(const Vec2& a) { return dot(a, a); }
inline double norm(const Vec2& a) { return std::sqrt(norm2(a)); }
inline double max_abs(const Vec2& a) { return std::max(std::fabs(a.x), std::fabs(a.y)); }

struct Vec3 {
  double x = 0, y = 0, z = 0;
  Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
};
inline Vec3 operator*(double s, const Vec3& v) { return v * s; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double norm2(const Vec3& a) { return dot(a, a); }
inline double norm(const Vec3& a) { return std::sqrt(norm2(a)); }
inline double max_abs(const Vec3& a) {
  return std::max(std::fabs(a.x), std::max(std::fabs(a.y), std::fabs(a.z)));
}

struct Mat2 {
  // row-major
  double a00 = 1, a01 = 0, a10 = 0, a11 = 1;
  Vec2 operator*(const Vec2& v) const { return {a00 * v.x + a01 * v.y, a10 * v.x + a11 * v.y}; }
  Mat2 operator*(const Mat2& o) const {
    return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
            a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
  }
  Mat2 transpose() const { return {a00, a10, a01, a11}; }
  double det() const { return a00 * a11 - a01 * a10; }
};
inline double max_abs_diff(const Mat2& a, const Mat2& b) {
  double m = std::fabs(a.a00 - b.a00);
  m = std::max(m, std::fabs(a.a01 - b.a01));
  m = std::max(m, std::fabs(a.a10 - b.a10));
  m = std::max(m, std::fabs(a.a11 - b.a11));
  return m;
}

struct Mat3 {
  std::array<std::array<double, 3>, 3> a{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Vec3 operator*(const Vec3& v) const {
    return {a[0][0] * v.x + a[0][1] * v.y + a[0][2] * v.z,
            a[1][0] * v.x + a[1][1] * v.y + a[1][2] * v.z,
            a[2][0] * v.x + a[2][1] * v.y + a[2][2] * v.z};
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += a[i][k] * o.a[k][j];
        r.a[i][j] = s;
      }
    return r;
  }
  Mat3 transpose() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.a[i][j] = a[j][i];
    return r;
  }
  double trace() const { return a[0][0] + a[1][1] + a[2][2]; }
};
inline double max_abs_diff(const Mat3& x, const Mat3& y) {
  double m = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m = std::max(m, std::fabs(x.a[i][j] - y.a[i][j]));
  return m;
}

// reduce an angle to [0, 2*pi)
inline double wrap_angle(double t) {
  double w = std::fmod(t, kTwoPi);
  if (w < 0) w += kTwoPi;
  if (w == kTwoPi) w = 0;
  return w;
}

// signed angular separation in (-pi, pi]
inline double wrap_to_pi(double t) {
  double w = std::fmod(t, kTwoPi);
  if (w > kPi) w -= kTwoPi;
  if (w <= -kPi) w += kTwoPi;
  return w;
}

}  // namespace galrep
