#pragma once

#include <cstdint>

namespace graphbits {

// splitmix64, used for seeding and stream derivation.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// xoshiro256** seeded through splitmix64. Stream t takes splitmix64 outputs
// 4t..4t+3 as its 256-bit state, so distinct streams of the same seed never
// share state words; sampling loops use one stream per sample index.
class Xoshiro256StarStar {
 public:
  static constexpr const char* kGeneratorId = "xoshiro256**/splitmix64";

  explicit Xoshiro256StarStar(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t sm = seed;
    for (std::uint64_t skip = 0; skip < 4 * stream; ++skip)
      (void)splitmix64_next(sm);
    for (auto& word : s_) word = splitmix64_next(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    // rejection from the top to avoid modulo bias
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace graphbits
