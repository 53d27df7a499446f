#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace rfh {

/// Counter-based splittable RNG. Every Monte Carlo trial draws from its own
/// stream keyed by derive_seed(master, trial), so experiment results do not
/// depend on scheduling or worker count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1); never returns an endpoint.
  double next_unit_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; consumes two words per variate so the
  /// stream layout is identical everywhere.
  double next_normal() {
    const double u1 = next_unit_open();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Exponential with rate 1.
  double next_exponential() { return -std::log(next_unit_open()); }

 private:
  std::uint64_t state_;
};

/// Sub-seed for trial `index` of an experiment seeded with `master`.
/// Pure function of its arguments; trials may run in any order.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed used by the CLI when none is given, so bare runs are reproducible.
inline constexpr std::uint64_t kDefaultSeed = 1729;

}  // namespace rfh
