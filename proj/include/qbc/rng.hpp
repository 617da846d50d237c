#pragma once

#include <cstdint>
#include <random>

namespace qbc {

using Rng = std::mt19937_64;

// splitmix64 step; used to derive independent per-session seeds from a root
// seed: session k runs on Rng(split_seed(root, k)).
inline std::uint64_t split_seed(std::uint64_t root, std::uint64_t index) {
  std::uint64_t z = root + (index + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline bool random_bit(Rng& rng) { return (rng() >> 63) != 0; }

inline double random_unit(Rng& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

// Uniform integer in [0, n).
inline std::size_t random_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace qbc
