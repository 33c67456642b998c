#pragma once

#include <cstdint>

#include "flock/lattice.hpp"
#include "flock/rng.hpp"

namespace flock {

// The Poisson clock families of the graphical construction:
//   Disaster       D^x      rate 1       wipes the flock at x
//   InternalBirth  F^{x,i}  rate i*phi   moves x from i to i+1
//   ExternalBirth  L^{x,y}  rate lambda  birth from x onto neighbor y
// `aux` selects within a family: the level i for F, the neighbor
// direction index for L (the lattice's fixed neighbor order).
enum class ClockFamily : uint8_t {
  Disaster = 0,
  InternalBirth = 1,
  ExternalBirth = 2,
};

// Splits one 64-bit seed into reproducible substreams, one per
// (family, site, aux) key. A substream realizes the clock's full
// arrival sequence from time 0, so the same seed yields the same
// arrivals no matter when or in which order clocks are first consulted.
// Coupled runs draw shared clocks from one ClockStreams instance; solo
// Gillespie runs only use the driver stream.
class ClockStreams {
 public:
  explicit ClockStreams(uint64_t seed) : seed_(seed) {}

  uint64_t seed() const { return seed_; }

  SplitMix64 stream(ClockFamily family, SiteKey site, uint32_t aux) const {
    uint64_t h = mix_key(seed_, uint64_t(family) + 1);
    h = mix_key(h, site);
    h = mix_key(h, aux);
    return SplitMix64(h);
  }

  // Driver stream for direct Gillespie sampling (solo runs).
  SplitMix64 driver() const { return SplitMix64(mix_key(seed_, 0)); }

 private:
  uint64_t seed_;
};

}  // namespace flock
