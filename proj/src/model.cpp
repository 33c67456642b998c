#include "flock/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace flock {

void ModelParams::validate() const {
  if (d < 1 || d > kMaxDimension) {
    throw std::invalid_argument("d must be in [1, 8]");
  }
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  if (!(lambda >= 0.0) || std::isinf(lambda)) {
    throw std::invalid_argument("lambda must be finite and >= 0");
  }
  if (std::isnan(phi) || phi < 0.0) {
    throw std::invalid_argument("phi must be >= 0 (or infinity)");
  }
  if (geometry.is_torus() && geometry.side < 3) {
    throw std::invalid_argument("torus side must be >= 3");
  }
}

void Configuration::set(SiteKey key, int s) {
  if (s < 0) throw std::invalid_argument("site state must be >= 0");
  if (s == 0) {
    cells_.erase(key);
  } else {
    cells_[key] = s;
  }
}

int Configuration::max_state() const {
  int m = 0;
  for (const auto& [key, s] : cells_) m = std::max(m, s);
  return m;
}

std::vector<SiteKey> Configuration::sorted_keys() const {
  std::vector<SiteKey> keys;
  keys.reserve(cells_.size());
  for (const auto& [key, s] : cells_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

Configuration Configuration::single_at_origin(const Lattice& lattice,
                                              int state) {
  Configuration c(lattice);
  c.set(lattice.origin(), state);
  return c;
}

Configuration Configuration::all_full(const Lattice& lattice, int N) {
  if (!lattice.geometry().is_torus()) {
    throw std::invalid_argument("all-full initial condition requires a torus");
  }
  Configuration c(lattice);
  for (SiteKey key : lattice.torus_sites()) c.set(key, N);
  return c;
}

int count_full_neighbors(const Lattice& lattice, SiteKey x,
                         const Configuration& config, int N) {
  SiteKey nb[2 * kMaxDimension];
  lattice.neighbors(x, nb);
  int n = 0;
  for (int k = 0; k < lattice.degree(); ++k) {
    if (config.state(nb[k]) == N) ++n;
  }
  return n;
}

SiteRates site_rates(SiteKey x, const Configuration& config,
                     const ModelParams& params) {
  if (params.contact_mode()) {
    throw std::invalid_argument(
        "site_rates requires finite phi; use the contact-mode simulator");
  }
  SiteRates r;
  int s = config.state(x);
  r.n_full = count_full_neighbors(config.lattice(), x, config, params.N);
  r.death = s >= 1 ? 1.0 : 0.0;
  r.birth = s < params.N ? s * params.phi + params.lambda * r.n_full : 0.0;
  return r;
}

double total_rate(const Configuration& config, const ModelParams& params) {
  if (params.contact_mode()) {
    throw std::invalid_argument("total_rate requires finite phi");
  }
  const Lattice& lattice = config.lattice();
  double total = 0.0;
  SiteKey nb[2 * kMaxDimension];
  std::unordered_map<SiteKey, bool> frontier_seen;
  for (const auto& [x, s] : config.cells()) {
    SiteRates r = site_rates(x, config, params);
    total += r.birth + r.death;
    if (s == params.N) {
      // Empty neighbors of a full site carry a birth rate; collect each
      // such site once.
      lattice.neighbors(x, nb);
      for (int k = 0; k < lattice.degree(); ++k) {
        if (config.state(nb[k]) != 0) continue;
        if (frontier_seen.emplace(nb[k], true).second) {
          total += site_rates(nb[k], config, params).birth;
        }
      }
    }
  }
  return total;
}

}  // namespace flock
