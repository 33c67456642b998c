#pragma once

#include <cstdint>
#include <functional>

#include "flock/lattice.hpp"

namespace flock {

enum class EventKind : uint8_t { InternalBirth, ExternalBirth, Disaster };

inline const char* to_string(EventKind k) {
  switch (k) {
    case EventKind::InternalBirth: return "INTERNAL_BIRTH";
    case EventKind::ExternalBirth: return "EXTERNAL_BIRTH";
    case EventKind::Disaster: return "DISASTER";
  }
  return "?";
}

struct TrajectoryEvent {
  double time = 0.0;
  SiteKey site = 0;
  EventKind kind = EventKind::Disaster;
  SiteKey source = 0;  // meaningful for ExternalBirth only
  int new_state = 0;   // site state after the event (flock size for b_t)
};

enum class RunStatus : uint8_t { Extinct, Censored, CapExceeded };

inline const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::Extinct: return "EXTINCT";
    case RunStatus::Censored: return "CENSORED";
    case RunStatus::CapExceeded: return "CAP_EXCEEDED";
  }
  return "?";
}

using EventObserver = std::function<void(const TrajectoryEvent&)>;

struct RunOptions {
  EventObserver observer;   // called after each applied event
  uint64_t check_every = 0; // audit incremental rates every k events (0 = off)
};

}  // namespace flock
