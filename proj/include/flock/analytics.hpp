#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "flock/model.hpp"

namespace flock {

// Half-width of the tie band around m == 1. Computed thresholds that
// land within the band are classified on the extinction side (the
// threshold is inclusive there), since double-precision evaluation
// cannot distinguish m from 1 at that resolution anyway.
constexpr double kCriticalTieBand = 1e-12;

// Mean number of daughter flocks a founder flock produces:
// m = 2*d*lambda * prod_{i=1}^{N-1} (i*phi + 2dl) / (1 + i*phi + 2dl),
// with the empty product for N = 1. The product is the probability
// p_reach that a founder flock climbs to size N before its disaster.
struct ThresholdReport {
  double m = 0.0;
  double p_reach = 1.0;
  double log_m = 0.0;  // -inf when m == 0; usable when m underflows

  bool subcritical() const { return m <= 1.0 + kCriticalTieBand; }
  bool strictly_subcritical() const { return m < 1.0 - kCriticalTieBand; }
};

// Evaluates the threshold in log space (sum of log1p terms), so N up to
// 1e6 and schedules lambda(N) are safe from underflow. Requires finite
// phi; lambda = 0 yields m = 0.
ThresholdReport compute_threshold(const ModelParams& params);

// Number of daughter flocks X of one founder:
//   P(X = k) = p_geo^k * (1 - p_geo) * p_reach   for k >= 1,
//   P(X = 0) = 1 - p_geo * p_reach,
// with p_geo = 2dl / (2dl + 1). The stored pmf is truncated at k_max;
// the tail mass beyond k_max is reported separately, never folded into
// pmf[0].
struct OffspringDist {
  double p_geo = 0.0;
  double p_reach = 1.0;
  std::vector<double> pmf;  // pmf[k] for k = 0..k_max
  double tail_mass = 0.0;

  double total_mass() const;  // sum(pmf) + tail_mass
  double mean() const;        // truncated sum plus closed-form tail mean
  double pgf(double s) const; // truncated terms plus closed-form tail
};

OffspringDist offspring_pmf(const ModelParams& params, int k_max);

struct GwResult {
  double extinction_prob = 1.0;  // smallest fixed point of the pgf
  bool is_subcritical = true;    // mean offspring <= 1 (tie-band inclusive)
};

// Closed form for this defective-geometric family: the pgf is rational,
// so q = G(q) is a quadratic whose non-unit root is (1 - p_reach*p_geo)
// / p_geo. Subcritical distributions return exactly 1.
GwResult gw_extinction(const OffspringDist& dist);

// Generic monotone fixed-point iteration q <- G(q) from q = 0; converges
// to the smallest root for any pgf. Used to cross-check the closed form.
double gw_extinction_fixed_point(const OffspringDist& dist,
                                 double tol = 1e-12,
                                 uint64_t max_iter = 1000000);

struct GwRun {
  bool extinct = false;
  std::vector<uint64_t> trajectory;  // Z_0, Z_1, ...
};

// Samples one Galton-Watson lineage: Z_0 = 1, each individual draws an
// offspring count from `dist` (exact geometric tail, no truncation
// effects). Stops at extinction, at `generations`, or when the
// population escapes `population_cap` (escape counts as survival).
GwRun simulate_gw(const OffspringDist& dist, int generations, uint64_t seed,
                  uint64_t population_cap = 1000000);

// Smallest N in [1, N_max] whose threshold m(N) under the schedule
// lambda_of_N falls to <= 1; nullopt when every scanned N stays above.
std::optional<int> smallest_extinct_N(
    int d, double phi, const std::function<double(int)>& lambda_of_N,
    int N_max);

}  // namespace flock
