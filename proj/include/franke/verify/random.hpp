#pragma once

#include <cstdint>

namespace franke::verify {

/// Counter-based SplitMix64: value k of stream `seed` is mix(seed + (k + 1) * golden).
/// Bounded draws use the remainder of one value; the bias is below 2^-50 for our ranges.
class SplitMix64 {
 public:
  static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed = 0) : seed_(seed) {}

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t at(std::uint64_t seed, std::uint64_t k) { return mix(seed + (k + 1) * golden); }

  std::uint64_t next() { return at(seed_, counter_++); }

  /// Uniform in [lo, hi].
  long long uniform(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

  bool chance(int num, int den) { return uniform(0, den - 1) < num; }

  /// Independent stream derived from this one's seed and a tag.
  SplitMix64 fork(std::uint64_t tag) const { return SplitMix64(at(seed_ ^ 0xD1B54A32D192ED03ULL, tag)); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace franke::verify
