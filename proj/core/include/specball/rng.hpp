#pragma once

#include <complex>
#include <cstdint>
#include <cmath>

namespace specball {

// Counter-based generator: every draw is a pure function of (seed, counter),
// so index-strided parallel sampling reproduces the single-worker stream
// bit for bit regardless of worker count.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return splitmix64(splitmix64(splitmix64(seed) ^ a) ^ b);
}

/// Uniform double in [0, 1), 53 random bits.
inline double uniform01(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return static_cast<double>(mix(seed, a, b) >> 11) * 0x1.0p-53;
}

/// Uniform angle in [0, 2*pi).
inline double angle(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return 6.283185307179586476925286766559 * uniform01(seed, a, b);
}

/// Uniform point in the square [-1,1] x [-1,1] of the complex plane.
inline std::complex<double> complex_box(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return {2.0 * uniform01(seed, a, 2 * b) - 1.0, 2.0 * uniform01(seed, a, 2 * b + 1) - 1.0};
}

/// Standard complex Gaussian (Box-Muller), for isotropic direction draws.
inline std::complex<double> complex_gaussian(std::uint64_t seed, std::uint64_t a,
                                             std::uint64_t b = 0) {
  const double u1 = uniform01(seed, a, 2 * b);
  const double u2 = uniform01(seed, a, 2 * b + 1);
  const double r = std::sqrt(-2.0 * std::log(u1 + 1e-300));
  const double th = 6.283185307179586476925286766559 * u2;
  return {r * std::cos(th), r * std::sin(th)};
}

}  // namespace rng
}  // namespace specball
