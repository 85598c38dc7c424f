#ifndef BOSC_RNG_HPP
#define BOSC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace bosc {

// Stateless 64-bit mixer (splitmix64 finalizer). Used to derive independent
// per-cell seeds from a base seed; the exact chain is part of the reproducible
// output contract and is documented in the README.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0, std::uint64_t d = 0) {
  std::uint64_t s = mix64(base);
  s = mix64(s ^ a);
  s = mix64(s ^ b);
  s = mix64(s ^ c);
  s = mix64(s ^ d);
  return s;
}

// mt19937_64 with platform-independent real draws: the engine's output stream
// is pinned by the standard, and uniforms are derived from the top 53 bits so
// identical seeds give identical values everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next() { return engine_(); }

  // in [0, 1)
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // Box-Muller, clamped to [lo, hi]; mean = midpoint, sd = (hi - lo) / 6.
  double normal_in(double lo, double hi) {
    double u1 = unit();
    double u2 = unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    double v = 0.5 * (lo + hi) + z * (hi - lo) / 6.0;
    return std::min(hi, std::max(lo, v));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace bosc

#endif  // BOSC_RNG_HPP
