#pragma once

#include <cmath>
#include <cstdint>

namespace graphlets::rng {

/// Counter-based random source ("splitmix64-counter"): every draw is a pure
/// function of (seed, counter), so parallel generation is schedule-independent
/// and independent implementations can reproduce byte-identical streams.
inline constexpr const char* kName = "splitmix64-counter";

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t hash(std::uint64_t seed, std::uint64_t counter) {
  return mix64(mix64(seed) ^ counter);
}

/// Uniform double in [0, 1) from (seed, counter).
inline double u01(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(hash(seed, counter) >> 11) * 0x1.0p-53;
}

/// Sequential convenience stream on top of the counter scheme.
class Stream {
public:
  explicit Stream(std::uint64_t seed, std::uint64_t start = 0) : seed_(seed), counter_(start) {}

  double next_u01() { return u01(seed_, counter_++); }

  std::uint64_t next_u64() { return hash(seed_, counter_++); }

  /// Uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

  /// Standard normal via Box-Muller.
  double next_normal() {
    double u1 = next_u01();
    double u2 = next_u01();
    while (u1 <= 1e-300) u1 = next_u01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace graphlets::rng
