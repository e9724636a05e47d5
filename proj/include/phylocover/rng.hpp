#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace phylocover {

// Seedable RNG used by every stochastic operation in the library.
// std::mt19937_64 has a standard-fixed output stream; the helpers below
// replace std::uniform_*_distribution, whose results differ between
// standard library implementations, so identical seeds give identical
// results everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform in [0, bound), bound >= 1. Rejection sampling, no modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t r = eng_();
      if (r >= threshold) return r % bound;
    }
  }

  std::size_t index(std::size_t bound) {
    return static_cast<std::size_t>(next_below(bound));
  }

  bool next_bit() { return (eng_() >> 63) != 0; }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  bool chance(double p) { return next_unit() < p; }

 private:
  std::mt19937_64 eng_;
};

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic seed derivation; order-sensitive fold over the parts.
inline std::uint64_t mix_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc908ULL;
  for (std::uint64_t p : parts) {
    h = splitmix64(h ^ (p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
  }
  return h;
}

}  // namespace phylocover
