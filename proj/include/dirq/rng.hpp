#pragma once

#include <cstdint>
#include <span>

#include "dirq/hilbert.hpp"

namespace dirq {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Counter-keyed splitmix64 stream. Every stochastic routine in the library
/// derives one stream per (seed, counter) pair, so results are bit-identical
/// for a given seed no matter how trials are ordered or sharded.
class TrialRng {
 public:
  explicit TrialRng(std::uint64_t seed, std::uint64_t counter = 0)
      : state_(detail::mix64(seed ^ detail::mix64(counter + detail::kGolden))) {}

  std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Area-uniform point on the unit sphere: z ~ U(-1,1), azimuth ~ U(0,2pi).
  Direction direction();

  /// Index sampled from non-negative weights (normalized internally).
  int sample(std::span<const double> weights);

 private:
  std::uint64_t state_;
};

inline Direction TrialRng::direction() {
  const double z = uniform(-1.0, 1.0);
  const double azimuth = uniform(0.0, 2.0 * 3.14159265358979323846);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(azimuth), r * std::sin(azimuth), z};
}

inline int TrialRng::sample(std::span<const double> weights) {
  double total = 0.0;
  for (double w : weights) total += w;
  double u = uniform01() * total;
  for (std::size_t k = 0; k + 1 < weights.size(); ++k) {
    u -= weights[k];
    if (u < 0.0) return static_cast<int>(k);
  }
  return static_cast<int>(weights.size()) - 1;
}

}  // namespace dirq
