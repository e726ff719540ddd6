#pragma once

#include <cstdint>
#include <random>

namespace abchain {

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Seed for stream k of a sweep: the k-th output of the splitmix64 sequence
// started at base. Streams are reproducible and independent of the order in
// which they are consumed.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t k) {
  return splitmix64(base + k * 0x9e3779b97f4a7c15ULL);
}

// Uniform double in [0,1) from the top 53 bits. std::uniform_real_distribution
// is implementation-defined; this conversion is bit-identical on every
// platform, which the reproducibility contract requires.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform double in [-1/2, 1/2).
inline double uniform_symmetric(std::mt19937_64& gen) {
  return uniform01(gen) - 0.5;
}

}  // namespace abchain
