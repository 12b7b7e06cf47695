#pragma once

#include <cstdint>
#include <random>

namespace rfclust {

// SplitMix64 scrambler (Steele, Lea & Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed of substream `index` of the stream identified by `seed`.
/// Substreams are independent of how many of them are drawn, so adding
/// series/initializations never perturbs earlier ones.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0xd1342543de82ef95ULL * (index + 1));
  std::uint64_t a = splitmix64(s);
  return splitmix64(s) ^ a;
}

inline std::mt19937_64 make_rng(std::uint64_t seed) {
  return std::mt19937_64(seed);
}

}  // namespace rfclust
