#include "flock/analytics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "flock/rng.hpp"

namespace flock {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ThresholdReport compute_threshold(const ModelParams& params) {
  params.validate();
  if (params.contact_mode()) {
    throw std::invalid_argument("compute_threshold requires finite phi");
  }
  const double tdl = params.two_d_lambda();
  ThresholdReport rep;
  if (params.lambda == 0.0) {
    rep.m = 0.0;
    rep.log_m = -kInf;
    rep.p_reach = params.N == 1 ? 1.0 : (params.phi > 0.0 ? 1.0 : 0.0);
    if (params.N > 1 && params.phi > 0.0) {
      double s = 0.0;
      for (int i = 1; i < params.N; ++i) {
        s += std::log1p(-1.0 / (1.0 + i * params.phi));
      }
      rep.p_reach = std::exp(s);
    }
    return rep;
  }
  double log_reach = 0.0;
  for (int i = 1; i < params.N; ++i) {
    log_reach += std::log1p(-1.0 / (1.0 + i * params.phi + tdl));
  }
  rep.p_reach = std::exp(log_reach);
  rep.m = tdl * rep.p_reach;
  rep.log_m = std::log(tdl) + log_reach;
  return rep;
}

double OffspringDist::total_mass() const {
  double s = 0.0;
  for (double p : pmf) s += p;
  return s + tail_mass;
}

double OffspringDist::mean() const {
  double s = 0.0;
  for (size_t k = 1; k < pmf.size(); ++k) s += double(k) * pmf[k];
  if (p_geo > 0.0 && !pmf.empty()) {
    // sum_{k > K} k g^k = g^{K+1} ((K+1) - K g) / (1-g)^2
    double K = double(pmf.size() - 1);
    double gk1 = std::pow(p_geo, K + 1.0);
    s += p_reach * gk1 * ((K + 1.0) - K * p_geo) / (1.0 - p_geo);
  }
  return s;
}

double OffspringDist::pgf(double s) const {
  double g = 0.0;
  double sk = 1.0;
  for (double p : pmf) {
    g += p * sk;
    sk *= s;
  }
  if (p_geo > 0.0 && !pmf.empty()) {
    double K = double(pmf.size() - 1);
    double gs = p_geo * s;
    g += p_reach * (1.0 - p_geo) * std::pow(gs, K + 1.0) / (1.0 - gs);
  }
  return g;
}

OffspringDist offspring_pmf(const ModelParams& params, int k_max) {
  params.validate();
  if (params.contact_mode()) {
    throw std::invalid_argument("offspring_pmf requires finite phi");
  }
  if (k_max < 0) throw std::invalid_argument("k_max must be >= 0");
  const double tdl = params.two_d_lambda();
  OffspringDist dist;
  dist.p_geo = tdl / (tdl + 1.0);
  dist.p_reach = compute_threshold(params).p_reach;
  dist.pmf.assign(size_t(k_max) + 1, 0.0);
  dist.pmf[0] = 1.0 - dist.p_reach * dist.p_geo;
  double gk = dist.p_geo;  // p_geo^k
  for (int k = 1; k <= k_max; ++k) {
    dist.pmf[size_t(k)] = gk * (1.0 - dist.p_geo) * dist.p_reach;
    gk *= dist.p_geo;
  }
  dist.tail_mass = dist.p_reach * gk;  // p_reach * (1-g) * sum_{k>K} g^k
  return dist;
}

GwResult gw_extinction(const OffspringDist& dist) {
  GwResult res;
  const double rg = dist.p_reach * dist.p_geo;  // P(X >= 1)
  if (dist.p_geo <= 0.0 || rg <= 0.0) {
    res.extinction_prob = 1.0;
    res.is_subcritical = true;
    return res;
  }
  double m = rg / (1.0 - dist.p_geo);
  res.is_subcritical = m <= 1.0 + kCriticalTieBand;
  if (res.is_subcritical) {
    res.extinction_prob = 1.0;
  } else {
    res.extinction_prob = (1.0 - rg) / dist.p_geo;
  }
  return res;
}

double gw_extinction_fixed_point(const OffspringDist& dist, double tol,
                                 uint64_t max_iter) {
  double q = 0.0;
  for (uint64_t i = 0; i < max_iter; ++i) {
    double next = dist.pgf(q);
    if (std::abs(next - q) < tol) return next;
    q = next;
  }
  return q;
}

GwRun simulate_gw(const OffspringDist& dist, int generations, uint64_t seed,
                  uint64_t population_cap) {
  if (generations < 1) throw std::invalid_argument("generations must be >= 1");
  GwRun run;
  SplitMix64 rng(seed);
  const double rg = dist.p_reach * dist.p_geo;
  const double log_g = dist.p_geo > 0.0 ? std::log(dist.p_geo) : 0.0;
  uint64_t z = 1;
  run.trajectory.push_back(z);
  for (int n = 0; n < generations; ++n) {
    uint64_t next = 0;
    for (uint64_t j = 0; j < z; ++j) {
      if (rng.uniform01() >= rg) continue;  // no daughters
      // Conditional on X >= 1, X - 1 is geometric with ratio p_geo.
      uint64_t x = 1 + uint64_t(std::log(rng.uniform_open()) / log_g);
      next += x;
      if (next > population_cap) break;
    }
    z = next;
    run.trajectory.push_back(z);
    if (z == 0) {
      run.extinct = true;
      return run;
    }
    if (z > population_cap) return run;  // escaped: declared survival
  }
  return run;
}

std::optional<int> smallest_extinct_N(
    int d, double phi, const std::function<double(int)>& lambda_of_N,
    int N_max) {
  if (N_max < 1) throw std::invalid_argument("N_max must be >= 1");
  for (int N = 1; N <= N_max; ++N) {
    ModelParams p{.d = d, .N = N, .lambda = lambda_of_N(N), .phi = phi};
    if (compute_threshold(p).subcritical()) return N;
  }
  return std::nullopt;
}

}  // namespace flock
