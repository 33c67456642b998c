#pragma once

#include <cmath>
#include <cstdint>

namespace flock {

// SplitMix64: one multiply-xor-shift scramble per draw, 64-bit state.
// Used both as the per-trial generator driving Gillespie loops and,
// hash-seeded, as the per-clock substream generator for shared-clock
// couplings. Streams seeded from distinct keys are as independent as
// the scrambler's avalanche allows, which is plenty for Monte Carlo.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed = 0) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform on [0,1) with 53-bit resolution.
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  // Uniform on (0,1); never an exact endpoint, so log() below is finite
  // and exponential gaps are strictly positive.
  double uniform_open() { return (double(next() >> 11) + 0.5) * 0x1.0p-53; }

  // Exponential waiting time; rate must be > 0.
  double exponential(double rate) { return -std::log(uniform_open()) / rate; }

  // Uniform integer in [0, n), n >= 1 (Lemire multiply-shift).
  uint64_t below(uint64_t n) {
    return uint64_t((static_cast<__uint128_t>(next()) * n) >> 64);
  }

 private:
  uint64_t state_;
};

// Deterministic key mixing for substream derivation: combine then run
// the value through the SplitMix64 scrambler so adjacent keys land on
// unrelated states.
inline uint64_t mix_key(uint64_t h, uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  SplitMix64 s(h);
  return s.next();
}

// Seed for trial `index` of a batch: independent of scheduling, so
// parallel trial execution reproduces serial results bit for bit.
inline uint64_t trial_seed(uint64_t base_seed, uint64_t index) {
  return mix_key(mix_key(base_seed, 0x7452049414cull), index);
}

}  // namespace flock
