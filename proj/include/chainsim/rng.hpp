#pragma once

#include <bit>
#include <cstdint>
#include <random>

namespace chainsim {

// SplitMix64 finalizer, used to spread raw seed material.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Seed-splitting rule: every agent draws from its own stream derived from
// (run seed, agent id), so adding observers or reordering metric reads
// never perturbs a trajectory.
constexpr std::uint64_t derive_stream_seed(std::uint64_t run_seed, std::uint64_t stream_id) {
  return mix64(run_seed ^ mix64(0x632BE59BD9B4E019ull ^ stream_id));
}

// Deterministic random stream. The engine is mt19937_64 (bit-exact output
// is pinned by the standard); the derived draws below avoid
// std::*_distribution so results do not depend on the standard library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform01() < p; }

  // Uniform integer in [0, n). n == 1 consumes no entropy; otherwise draws
  // the top 32 bits masked to the next power of two, rejecting overshoot.
  std::uint32_t uniform_below(std::uint32_t n) {
    if (n <= 1) return 0;
    const std::uint32_t mask = std::bit_ceil(n) - 1;
    for (;;) {
      const auto v = static_cast<std::uint32_t>(engine_() >> 32) & mask;
      if (v < n) return v;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace chainsim
