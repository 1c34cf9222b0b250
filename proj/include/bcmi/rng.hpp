#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace bcmi {

// splitmix64; advances `state` and returns the next output.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Deterministic PRNG (xoshiro256++, state seeded via splitmix64).
///
/// Hand-rolled instead of <random> so that sequences are reproducible
/// across standard-library versions and platforms; every result in this
/// project is replayable from a 64-bit seed. One master seed can derive
/// any number of independent substreams (initial conditions, per-step
/// noise, per-restart optimizers), so extending one stream never shifts
/// the draws of another.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t s = seed;
    for (auto& word : state_) word = splitmix64(s);
  }

  /// Independent generator for (seed, stream). Distinct streams of the
  /// same seed are decorrelated; the same pair always yields the same
  /// sequence.
  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix64(s);
    s += (stream + 1) * 0xd1b54a32d192ed03ULL;
    const std::uint64_t b = splitmix64(s);
    return Rng(a ^ (b + 0x9e3779b97f4a7c15ULL));
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Gaussian draw via Box-Muller (cosine branch only, so each call
  /// consumes exactly two 64-bit words).
  double normal(double mean = 0.0, double stddev = 1.0) {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double two_pi = 6.283185307179586476925286766559;
    return mean + stddev * r * std::cos(two_pi * u2);
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<std::uint64_t, 4> state_;
};

}  // namespace bcmi
