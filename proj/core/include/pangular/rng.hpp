#pragma once

#include <cstdint>

namespace pangular {

/// SplitMix64. Fixed constants, 64-bit state, identical integer stream on
/// every platform; doubles come from the top 53 bits. This is the generator
/// recorded in report metadata.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  static constexpr const char* name() { return "splitmix64"; }

 private:
  std::uint64_t state_;
};

/// Output finalizer of SplitMix64, used to decorrelate substream seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Independent stream for (seed, index); index-adjacent streams do not
/// overlap even when each consumes many values.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed + 0x9e3779b97f4a7c15ULL) ^
                    mix64(index + 0x632be59bd9b4e019ULL));
}

}  // namespace pangular
