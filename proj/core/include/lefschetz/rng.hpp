#pragma once

#include <cstdint>
#include <random>

namespace lefschetz {

/// One splitmix64 step; the basis of all seed derivation.
inline std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Deterministic seed split. Every consumer of randomness derives its own
/// stream: root → cell (by grid ordinal) → instance (by index) → purpose
/// (generators = tag 0, ell trials = tag 1) → item. The split is
/// splitmix64(parent XOR golden·(tag+1)), so sibling streams never collide
/// in practice and reruns with the same root seed are bit-identical.
inline std::uint64_t split_seed(std::uint64_t parent, std::uint64_t tag) {
  return splitmix64(parent ^ (0x9E3779B97F4A7C15ULL * (tag + 1)));
}

/// mt19937_64 is fully specified by the standard, so raw draws are portable;
/// std::uniform_int_distribution is not, hence the hand-rolled rejection
/// sampler below.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform draw from [0, bound), bound >= 1. Unbiased via rejection on the
  /// largest multiple of bound below 2^64.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t v;
    do {
      v = gen_();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace lefschetz
