#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "flock/clocks.hpp"
#include "flock/events.hpp"
#include "flock/model.hpp"

namespace flock {

// State of the dominating branching-like process: any number of flocks
// per site, each of size 1..N. Sizes at a site form an unordered
// multiset; accessors return them sorted for determinism.
class BranchingConfig {
 public:
  explicit BranchingConfig(const Lattice& lattice) : lattice_(lattice) {}

  const Lattice& lattice() const { return lattice_; }
  void add_flock(SiteKey site, int size);
  void add_flock_at(std::span<const int64_t> coords, int size) {
    add_flock(lattice_.pack(coords), size);
  }
  std::vector<int> flocks(SiteKey site) const;  // sorted sizes
  uint64_t total_flocks() const { return total_; }
  bool empty() const { return total_ == 0; }
  const std::unordered_map<SiteKey, std::vector<int>>& sites() const {
    return sites_;
  }
  std::vector<SiteKey> sorted_keys() const;

  static BranchingConfig single_at_origin(const Lattice& lattice, int size);
  static BranchingConfig all_full(const Lattice& lattice, int N);

 private:
  Lattice lattice_;
  std::unordered_map<SiteKey, std::vector<int>> sites_;
  uint64_t total_ = 0;
};

struct BranchingRunResult {
  RunStatus status = RunStatus::Extinct;
  double end_time = 0.0;
  double extinction_time = 0.0;  // valid when status == Extinct
  BranchingConfig final_config;
  uint64_t event_count = 0;
  uint64_t peak_flocks = 0;
};

// Exact simulation of the branching-like process: new flocks are seeded
// at rate lambda * (number of size-N flocks on the 2d neighbor sites),
// each flock grows i -> i+1 at rate i*phi + 2d*lambda while i < N, and
// each flock dies independently at rate 1. CAP_EXCEEDED is returned the
// moment the total flock count passes flock_cap (counted as survival by
// the estimators). Event records carry the affected flock's size after
// the event (0 for a death).
BranchingRunResult run_branching(const ModelParams& params,
                                 const BranchingConfig& init, double t_max,
                                 uint64_t flock_cap,
                                 const ClockStreams& streams,
                                 const RunOptions& options = {});

// One founder trial: a single isolated flock started at size 1 grows at
// i*phi + 2d*lambda, dies at rate 1, and once at size N gives birth at
// total rate 2d*lambda until its death. Returns the number of daughter
// flocks (0 if the founder never reaches N).
int founder_trial(const ModelParams& params, const ClockStreams& streams);

}  // namespace flock
