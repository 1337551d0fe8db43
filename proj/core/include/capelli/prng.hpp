#pragma once

#include <cstdint>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

/// SplitMix64. Fixed algorithm so seeded reports reproduce bit-for-bit across
/// platforms (std::mt19937 distributions are not portable).
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi] (inclusive); hi - lo must fit in int64.
  int64_t next_in(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(next() % span);
  }

  /// Uniform double in [-1, 1].
  double next_signed_unit() {
    return static_cast<double>(next() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
  }

  /// Rational with numerator in [-9, 9] and denominator in [1, 4].
  Rat next_rat() { return Rat(next_in(-9, 9), next_in(1, 4)); }

  /// `count` pairwise-distinct rationals drawn as next_rat.
  std::vector<Rat> distinct_rats(int count) {
    std::vector<Rat> out;
    while (static_cast<int>(out.size()) < count) {
      Rat c = next_rat();
      bool dup = false;
      for (const Rat& r : out) dup = dup || r == c;
      if (!dup) out.push_back(c);
    }
    return out;
  }

 private:
  uint64_t state_;
};

}  // namespace capelli
