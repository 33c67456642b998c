#pragma once

#include <cmath>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "flock/lattice.hpp"

namespace flock {

// Parameters of the flock process. Each site holds 0..N individuals;
// a site in state i gains one individual at rate i*phi + lambda*n_full
// (n_full = number of nearest neighbors at the maximum N) and loses the
// whole flock at rate 1. phi may be +infinity, in which case states are
// restricted to {0, N} and only the contact-mode simulator applies.
struct ModelParams {
  int d = 1;
  int N = 1;
  double lambda = 1.0;
  double phi = 0.0;
  Geometry geometry = Geometry::sparse();

  bool contact_mode() const { return std::isinf(phi); }
  double two_d_lambda() const { return 2.0 * d * lambda; }
  Lattice lattice() const { return Lattice(d, geometry); }
  void validate() const;  // throws std::invalid_argument
};

// Sparse site -> state map. Only states in {1..N} are stored; absent
// sites are in state 0. Coordinates are validated by the lattice on
// insertion (torus sites live in [0, L)^d).
class Configuration {
 public:
  explicit Configuration(const Lattice& lattice) : lattice_(lattice) {}

  const Lattice& lattice() const { return lattice_; }
  int state(SiteKey key) const {
    auto it = cells_.find(key);
    return it == cells_.end() ? 0 : it->second;
  }
  int state_at(std::span<const int64_t> coords) const {
    return state(lattice_.pack(coords));
  }
  void set(SiteKey key, int s);
  void set_at(std::span<const int64_t> coords, int s) {
    set(lattice_.pack(coords), s);
  }

  bool empty() const { return cells_.empty(); }
  size_t occupied_count() const { return cells_.size(); }
  int max_state() const;
  const std::unordered_map<SiteKey, int>& cells() const { return cells_; }
  std::vector<SiteKey> sorted_keys() const;

  static Configuration single_at_origin(const Lattice& lattice, int state);
  static Configuration all_full(const Lattice& lattice, int N);  // torus only

 private:
  Lattice lattice_;
  std::unordered_map<SiteKey, int> cells_;
};

struct SiteRates {
  double birth = 0.0;  // rate of i -> i+1 at this site
  double death = 0.0;  // 1 if occupied, else 0
  int n_full = 0;      // neighbors in state N
};

int count_full_neighbors(const Lattice& lattice, SiteKey x,
                         const Configuration& config, int N);

// Exact per-site transition rates; rejects phi = infinity (contact mode
// has its own two-state rate table).
SiteRates site_rates(SiteKey x, const Configuration& config,
                     const ModelParams& params);

// Sum of all transition rates the configuration can fire: birth+death
// over occupied sites plus birth rates of empty sites adjacent to a
// full site. Zero exactly when the configuration is empty.
double total_rate(const Configuration& config, const ModelParams& params);

}  // namespace flock
