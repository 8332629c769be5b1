#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace exclt {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed-splitting rule used everywhere a task needs its own stream:
///
///   split_seed(s, replicate, row) = mix(mix(mix(s) ^ replicate) ^ row)
///
/// with mix = splitmix64. Row 0 of a replicate is reserved for the draw of
/// the directing measure; array rows use rows 1, 2, ... . Every stream
/// depends only on (seed, replicate, row), never on the thread that runs it.
constexpr std::uint64_t split_seed(std::uint64_t seed, std::uint64_t replicate,
                                   std::uint64_t row) noexcept {
  return splitmix64(splitmix64(splitmix64(seed) ^ replicate) ^ row);
}

inline constexpr std::uint64_t kDirectingRow = 0;

/// Uniform on the open interval (0, 1), 53 bits.
inline double open_unit(Rng& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline double standard_exponential(Rng& rng) { return -std::log(open_unit(rng)); }

/// Box-Muller without a cached second variate, so every call consumes
/// exactly two engine outputs.
inline double standard_normal(Rng& rng) {
  const double u = open_unit(rng);
  const double v = open_unit(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

}  // namespace exclt
