#pragma once

#include <cstdint>

namespace spinecensus {

// splitmix64: the 64-bit mixing generator used for all seeded randomness.
// Streams are split per sample index by key derivation, so results do not
// depend on worker count or evaluation order.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

inline std::uint64_t mix64(std::uint64_t x) {
  SplitMix64 g{x};
  return g.next();
}

// Independent stream for one sample of a seeded experiment.
inline SplitMix64 sample_stream(std::uint64_t seed, std::uint64_t sample_index) {
  return SplitMix64{mix64(seed ^ mix64(sample_index + 0x9E3779B97F4A7C15ull))};
}

}  // namespace spinecensus
