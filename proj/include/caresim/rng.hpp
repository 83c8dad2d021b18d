#pragma once

#include <cstdint>
#include <cmath>

namespace caresim {

// SplitMix64 step (Steele, Lea & Flood). Used to expand seed material.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// One seeded random stream, implemented as xoshiro256** (Blackman & Vigna).
// The state is derived from (master_seed, stream_id, replication) through
// SplitMix64, so distinct triples give unrelated, reproducible sequences.
// All distribution sampling is built on the raw 64-bit output; nothing here
// depends on library-specific distribution code.
class RandomStream {
 public:
  RandomStream(std::uint64_t master_seed, std::uint64_t stream_id,
               std::uint64_t replication) {
    // Absorb each component and run the full output mix in between, so any
    // change to the triple avalanches through the whole state.
    std::uint64_t h = master_seed;
    h = splitmix64_next(h);
    h ^= 0x6a09e667f3bcc909ULL + stream_id;
    h = splitmix64_next(h);
    h ^= 0xbb67ae8584caa73bULL + replication;
    h = splitmix64_next(h);
    for (auto& word : state_) word = splitmix64_next(h);
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0,1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Exponential with the given rate (events per unit time). Strictly positive.
  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace caresim
