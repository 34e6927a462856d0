#pragma once

// Counter-based random stream: every draw is a pure function of
// (seed, stream, counter), so results do not depend on thread scheduling and
// can be reproduced in any language.
//
//   mix(z)   = SplitMix64 finalizer:
//                z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                z ^ (z >> 31)
//   key      = mix(seed ^ mix(stream + G)),   G = 0x9E3779B97F4A7C15
//   at(i)    = mix(key + (i + 1) * G)         (all arithmetic mod 2^64)
//   uniform  = (at(i) >> 11) * 2^-53          in [0, 1)

#include <cstdint>

#include "frz/dense_set.hpp"

namespace frz {

inline constexpr std::uint64_t kDefaultSeed = 1729;

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  constexpr CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(splitmix64_mix(seed ^ splitmix64_mix(stream + kGamma))) {}

  constexpr std::uint64_t at(std::uint64_t counter) const { return splitmix64_mix(key_ + (counter + 1) * kGamma); }
  constexpr double uniform(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }
  // Uniform in [0, bound), bound >= 1 (modulo bias is negligible at the sizes used here).
  constexpr std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const { return at(counter) % bound; }

 private:
  std::uint64_t key_;
};

// Independent inclusion of every point with probability `density`, using
// counters [first, first + p^n).
DenseSet sample_set(const GroupParams& g, const CounterRng& rng, double density, std::uint64_t first = 0);

}  // namespace frz
