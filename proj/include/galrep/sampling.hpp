#pragma once
#include "galrep/galilei.hpp"
#include "galrep/rng.hpp"

namespace galrep {

inline SU2Element random_su2(Rng& rng) {
  // gaussian-free uniform-ish point on S^3: rejection from the cube
  for (;;) {
    SU2Element q{rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)};
    const double n = q.norm();
    if (n > 0.2 && n <= 1.0) {
      q.renormalize();
      return q;
    }
  }
}

inline Vec2 random_unit2(Rng& rng) {
  const double t = rng.uniform(0, kTwoPi);
  return {std::cos(t), std::sin(t)};
}

inline Gal3Element random_gal3(Rng& rng, double range = 1.5) {
  return {random_su2(rng), rng.vec3(-range, range), rng.uniform(-range, range),
          rng.vec3(-range, range)};
}

inline Gal3Element random_gal3_homog(Rng& rng, double range = 1.5) {
  return {random_su2(rng), rng.vec3(-range, range), 0, {0, 0, 0}};
}

inline Gal2Element random_gal2(Rng& rng, double range = 1.5) {
  return {rng.uniform(-2, 2), rng.vec2(-range, range), rng.uniform(-range, range),
          rng.vec2(-range, range)};
}

inline Gal2Element random_gal2_homog(Rng& rng, double range = 1.5) {
  return {rng.uniform(-2, 2), rng.vec2(-range, range), 0, {0, 0}};
}

}  // namespace galrep
