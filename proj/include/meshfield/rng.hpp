#pragma once

#include <cstdint>

namespace meshfield {

// Counter-based deterministic generator. Each draw hashes
// (seed, stream, counter) with a SplitMix64-style finalizer, so any
// (seed, stream) pair yields the same sequence on every platform and the
// generator can be split per ray / per step without shared state.
class RngState {
 public:
  RngState() = default;
  RngState(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

  // Independent substream, e.g. derive(ray_index) inside a parallel loop.
  RngState derive(uint64_t substream) const {
    return RngState(seed_, mix(stream_ ^ (substream * 0x9e3779b97f4a7c15ull)));
  }

  uint64_t next_u64() {
    uint64_t z = seed_ + 0x9e3779b97f4a7c15ull * ++counter_;
    return mix(z ^ mix(stream_));
  }

  // Uniform draw in [0,1) with 53-bit resolution.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform draw in [lo,hi).
  double next_double(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // Uniform integer in [0, n). n must be > 0; modulo bias is irrelevant at
  // the ranges used here (n << 2^64).
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

 private:
  static uint64_t mix(uint64_t z) {
    z ^= z >> 33;
    z *= 0xff51afd7ed558ccdull;
    z ^= z >> 33;
    z *= 0xc4ceb9fe1a85ec53ull;
    z ^= z >> 33;
    return z;
  }

  uint64_t seed_ = 0;
  uint64_t stream_ = 0;
  uint64_t counter_ = 0;
};

// Stream ids for the fixed generator roles. Keeping them in one place avoids
// accidental stream collisions between modules.
namespace rng_stream {
inline constexpr uint64_t kStratified = 1;
inline constexpr uint64_t kBand = 2;
inline constexpr uint64_t kMissRay = 3;
inline constexpr uint64_t kPixelPick = 4;
inline constexpr uint64_t kBatchPick = 5;
inline constexpr uint64_t kInit = 6;
inline constexpr uint64_t kCameraPhase = 7;
}  // namespace rng_stream

}  // namespace meshfield
