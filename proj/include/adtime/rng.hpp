#pragma once

#include <cstdint>

namespace adtime {

/// SplitMix64 (Steele/Lea/Vigna). Pinned so that scenarios regenerate
/// identically from a seed in any implementation of this tool:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
///   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53-bit mantissa.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [lo, hi] via modulo reduction. The slight modulo
  /// bias is irrelevant at the span sizes used here (< 2^6) and keeps the
  /// contract trivially portable.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(next_u64() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace adtime
