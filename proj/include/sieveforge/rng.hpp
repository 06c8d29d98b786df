#pragma once

#include <cstdint>

namespace sieveforge {

/// splitmix64; used instead of <random> engines so that seeded corpus
/// generation is bit-identical across standard libraries.
struct Rng {
  std::uint64_t state;

  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

}  // namespace sieveforge
