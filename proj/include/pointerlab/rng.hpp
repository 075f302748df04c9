#pragma once

#include <cstdint>

// Counter-based random numbers for reproducible ensembles.
//
// All sampling in this library derives per-trial values from a run seed with
//   derive(seed, i) = splitmix64 output number i of the stream seeded with
//   `seed`,
// i.e. mix(seed + (i + 1) * golden_gamma) with the SplitMix64 finalizer
// (Steele, Lea, Flood, "Fast splittable pseudorandom number generators").
// Trials are therefore independent of evaluation order: the same (seed, i)
// always yields the same value, whether trials run serially or fanned out
// across workers. Bit-exact reproducibility of every tally is part of the
// library's external contract.

namespace pointerlab::rng {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer.
constexpr std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Output number `index` of the SplitMix64 stream seeded with `seed`.
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
  return mix(seed + (index + 1) * golden_gamma);
}

/// Uniform double in [0, 1) from the top 53 bits.
constexpr double uniform01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace pointerlab::rng
