#pragma once

#include <cstdint>

namespace clustersim {

// SplitMix64 finalizer: bijective avalanche on 64 bits.
constexpr uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Counter-based streams: every draw is a pure function of
// (seed, stream, counter), so Monte Carlo trials can be evaluated in any
// order and on any number of threads with bit-identical results.
struct StreamKey {
  uint64_t key;

  static StreamKey root(uint64_t seed) { return {mix64(seed)}; }
  StreamKey child(uint64_t stream) const { return {mix64(key ^ stream)}; }
  uint64_t word(uint64_t counter) const { return mix64(key ^ counter); }

  // Uniform double in [0, 1) from the counter-th word of this stream.
  double uniform(uint64_t counter) const {
    return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
  }
};

// Fixed stream salts, one per independent randomness consumer.
namespace stream {
constexpr uint64_t trial(uint64_t t) { return 0x7472000000000000ull ^ t; }
constexpr uint64_t sector(int s) { return 0x7365000000000000ull ^ static_cast<uint64_t>(s); }
constexpr uint64_t bootstrap = 0x626f6f7473747261ull;
}  // namespace stream

}  // namespace clustersim
