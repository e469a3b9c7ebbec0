#pragma once

#include <cstdint>
#include <random>

namespace matchtime {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed of sub-stream `index` under a master seed. Realization i of an
// experiment always draws from stream_rng(seed, i), so results do not
// depend on how realizations are scheduled across workers.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return mix64(mix64(seed) + 0x9e3779b97f4a7c15ULL * (index + 1));
}

inline Rng stream_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(stream_seed(seed, index));
}

// Uniform double in [0, 1) from the top 53 bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace matchtime
