#pragma once
#include <cstdint>
#include <string_view>

#include "galrep/linalg.hpp"

namespace galrep {

// xoshiro256** seeded through splitmix64. Self-contained so that sweeps are
// reproducible across platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) w = splitmix64(x);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0, 1)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * unit(); }
  int uniform_int(int a, int b) {  // inclusive bounds
    return a + static_cast<int>(next() % static_cast<std::uint64_t>(b - a + 1));
  }
  Vec2 vec2(double a, double b) { return {uniform(a, b), uniform(a, b)}; }
  Vec3 vec3(double a, double b) { return {uniform(a, b), uniform(a, b), uniform(a, b)}; }

  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }
  std::uint64_t s_[4];
};

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// per-check stream: adding checks never perturbs existing ones
inline Rng check_stream(std::uint64_t seed, std::string_view check_name) {
  return Rng(seed ^ fnv1a(check_name));
}

}  // namespace galrep
