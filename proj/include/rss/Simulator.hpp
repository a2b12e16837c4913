#ifndef RSS_SIMULATOR_HPP
#define RSS_SIMULATOR_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rss/Instance.hpp"
#include "rss/Sdp.hpp"

namespace rss {

struct SimulationReport {
  std::int64_t runs = 0;
  double meanCost = 0.0;
  double stdError = 0.0;              // sample stdev / sqrt(runs)
  std::vector<double> runCosts;       // retained only on request
};

/// One draw from the untruncated Poisson distribution by CDF inversion.
int samplePoisson(double mean, std::mt19937_64& rng);

/// Monte Carlo evaluation of an (R_t, s_t, S_t) policy under full
/// backlogging. Each run draws untruncated Poisson demands from its own
/// stream seeded with seed + run index.
SimulationReport simulatePolicy(const Instance& instance, const Policy& policy,
                                std::int64_t runs, std::uint64_t seed,
                                bool keepRunCosts = false);

}  // namespace rss

#endif  // RSS_SIMULATOR_HPP
