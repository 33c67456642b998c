#include "flock/simulator.hpp"

#include <cmath>
#include <stdexcept>

#include "flock/rate_table.hpp"

namespace flock {

namespace {

class EtaEngine {
 public:
  EtaEngine(const ModelParams& params, const Configuration& init, bool contact)
      : params_(params),
        lattice_(init.lattice()),
        config_(init),
        contact_(contact) {
    params_.validate();
    if (!contact_ && params_.contact_mode()) {
      throw std::invalid_argument("phi = infinity requires contact mode");
    }
    if (init.lattice().geometry() != params.geometry ||
        init.lattice().dim() != params.d) {
      throw std::invalid_argument("configuration lattice does not match params");
    }
    for (const auto& [key, s] : init.cells()) {
      if (s > params_.N) {
        throw std::invalid_argument("initial state exceeds N");
      }
      if (contact_ && s != params_.N) {
        throw std::invalid_argument(
            "contact mode requires initial states in {0, N}");
      }
    }
    // Deterministic table layout: seed rates in sorted key order.
    for (SiteKey key : config_.sorted_keys()) {
      refresh_site(key);
      if (config_.state(key) == params_.N) refresh_neighbors(key);
    }
  }

  EtaRunResult run(double t_max, SplitMix64 rng, const RunOptions& options) {
    if (!(t_max > 0.0)) throw std::invalid_argument("t_max must be > 0");
    EtaRunResult result{RunStatus::Extinct, 0.0, 0.0, config_, 0};
    if (config_.empty()) return result;

    double t = 0.0;
    uint64_t events = 0;
    SiteKey nb[2 * kMaxDimension];
    while (true) {
      const double total = rates_.total();
      t += rng.exponential(total);
      if (t > t_max) {
        result.status = RunStatus::Censored;
        result.end_time = t_max;
        result.final_config = config_;
        result.event_count = events;
        return result;
      }
      const SiteKey x = rates_.sample(rng.uniform01() * total);
      const int s = config_.state(x);

      TrajectoryEvent ev;
      ev.time = t;
      ev.site = x;
      if (s == 0) {
        // Frontier site: only an external birth can fire here.
        int k = full_neighbors(x, nb);
        ev.kind = EventKind::ExternalBirth;
        ev.source = nb[rng.below(uint64_t(k))];
        ev.new_state = contact_ ? params_.N : 1;
      } else {
        const double birth =
            s < params_.N
                ? s * params_.phi + params_.lambda * count_full(x)
                : 0.0;
        if (birth <= 0.0) {
          ev.kind = EventKind::Disaster;
          ev.new_state = 0;
        } else {
          const double v = rng.uniform01() * (1.0 + birth);
          if (v < 1.0) {
            ev.kind = EventKind::Disaster;
            ev.new_state = 0;
          } else if (v < 1.0 + s * params_.phi) {
            ev.kind = EventKind::InternalBirth;
            ev.new_state = s + 1;
          } else {
            int k = full_neighbors(x, nb);
            ev.kind = EventKind::ExternalBirth;
            ev.source = nb[rng.below(uint64_t(k))];
            ev.new_state = s + 1;
          }
        }
      }

      apply(x, s, ev.new_state);
      ++events;
      if (options.observer) options.observer(ev);
      if (options.check_every && events % options.check_every == 0) audit();
      if (config_.empty()) {
        result.status = RunStatus::Extinct;
        result.end_time = t;
        result.extinction_time = t;
        result.final_config = config_;
        result.event_count = events;
        return result;
      }
    }
  }

 private:
  int count_full(SiteKey x) const {
    SiteKey nb[2 * kMaxDimension];
    lattice_.neighbors(x, nb);
    int n = 0;
    for (int k = 0; k < lattice_.degree(); ++k) {
      if (config_.state(nb[k]) == params_.N) ++n;
    }
    return n;
  }

  // Collects full neighbors into `nb`; returns their count.
  int full_neighbors(SiteKey x, SiteKey* nb) const {
    SiteKey all[2 * kMaxDimension];
    lattice_.neighbors(x, all);
    int k = 0;
    for (int i = 0; i < lattice_.degree(); ++i) {
      if (config_.state(all[i]) == params_.N) nb[k++] = all[i];
    }
    return k;
  }

  void refresh_site(SiteKey x) {
    const int s = config_.state(x);
    const int nf = count_full(x);
    double rate;
    if (s == 0) {
      rate = params_.lambda * nf;
    } else if (s < params_.N) {
      rate = 1.0 + s * params_.phi + params_.lambda * nf;
    } else {
      rate = 1.0;
    }
    if (rate > 0.0) {
      rates_.set(x, rate);
    } else {
      rates_.erase(x);
    }
  }

  void refresh_neighbors(SiteKey x) {
    SiteKey nb[2 * kMaxDimension];
    lattice_.neighbors(x, nb);
    for (int k = 0; k < lattice_.degree(); ++k) refresh_site(nb[k]);
  }

  void apply(SiteKey x, int old_state, int new_state) {
    config_.set(x, new_state);
    refresh_site(x);
    const bool was_full = old_state == params_.N;
    const bool is_full = new_state == params_.N;
    if (was_full != is_full) refresh_neighbors(x);
  }

  // From-scratch recomputation of the total rate; guards the incremental
  // bookkeeping in test mode.
  void audit() const {
    double expected = 0.0;
    SiteKey nb[2 * kMaxDimension];
    std::unordered_map<SiteKey, bool> seen;
    for (const auto& [x, s] : config_.cells()) {
      expected += 1.0;
      if (s < params_.N) {
        expected += s * params_.phi + params_.lambda * count_full(x);
      } else {
        lattice_.neighbors(x, nb);
        for (int k = 0; k < lattice_.degree(); ++k) {
          if (config_.state(nb[k]) != 0) continue;
          if (seen.emplace(nb[k], true).second) {
            expected += params_.lambda * count_full(nb[k]);
          }
        }
      }
    }
    const double got = rates_.total();
    const double scale = std::max({1.0, expected, got});
    if (std::abs(got - expected) > 1e-9 * scale) {
      throw std::logic_error("rate bookkeeping drifted from recomputation");
    }
  }

  ModelParams params_;
  Lattice lattice_;
  Configuration config_;
  RateTable rates_;
  bool contact_;
};

}  // namespace

EtaRunResult run_eta(const ModelParams& params, const Configuration& init,
                     double t_max, const ClockStreams& streams,
                     const RunOptions& options) {
  if (params.contact_mode()) {
    throw std::invalid_argument("run_eta requires finite phi; use run_contact");
  }
  EtaEngine engine(params, init, /*contact=*/false);
  return engine.run(t_max, streams.driver(), options);
}

EtaRunResult run_contact(const ModelParams& params, const Configuration& init,
                         double t_max, const ClockStreams& streams,
                         const RunOptions& options) {
  EtaEngine engine(params, init, /*contact=*/true);
  return engine.run(t_max, streams.driver(), options);
}

}  // namespace flock
