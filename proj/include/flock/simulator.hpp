#pragma once

#include <cstdint>

#include "flock/clocks.hpp"
#include "flock/events.hpp"
#include "flock/model.hpp"

namespace flock {

struct EtaRunResult {
  RunStatus status = RunStatus::Extinct;
  double end_time = 0.0;         // extinction time or the horizon
  double extinction_time = 0.0;  // valid when status == Extinct
  Configuration final_config;
  uint64_t event_count = 0;
};

// Exact event-driven simulation of the flock process: next event time is
// exponential in the total rate, the event is chosen proportionally to
// per-site rates, and bookkeeping is incremental (an event touches only
// the changed site and, when its fullness flips, the 2d neighbors).
// Runs until the configuration empties or t_max is reached.
EtaRunResult run_eta(const ModelParams& params, const Configuration& init,
                     double t_max, const ClockStreams& streams,
                     const RunOptions& options = {});

// Two-state dynamics for phi = infinity: empty sites jump straight to N
// at rate lambda * n_full, full sites die at rate 1. Initial states must
// lie in {0, N}. For N = 1 this coincides with run_eta event for event.
EtaRunResult run_contact(const ModelParams& params, const Configuration& init,
                         double t_max, const ClockStreams& streams,
                         const RunOptions& options = {});

}  // namespace flock
