#include "rss/Simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rss {

int samplePoisson(double mean, std::mt19937_64& rng) {
  if (mean <= 0.0) return 0;
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  double term = std::exp(-mean);
  double cdf = term;
  int k = 0;
  const int cap = static_cast<int>(mean + 12.0 * std::sqrt(mean) + 200.0);
  while (u >= cdf && k < cap) {
    ++k;
    term *= mean / k;
    cdf += term;
  }
  return k;
}

SimulationReport simulatePolicy(const Instance& instance, const Policy& policy,
                                std::int64_t runs, std::uint64_t seed, bool keepRunCosts) {
  instance.validate();
  if (runs < 1) throw std::invalid_argument("simulatePolicy: runs must be >= 1");
  if (instance.backorderFraction != 1.0) {
    throw std::invalid_argument("simulatePolicy: only full backlogging (beta = 1) is supported");
  }
  int previousPeriod = 0;
  for (const PolicyReview& review : policy.reviews) {
    if (review.period <= previousPeriod || review.period > instance.periods) {
      throw std::invalid_argument(
          "simulatePolicy: policy review periods must be strictly increasing within the horizon");
    }
    previousPeriod = review.period;
  }

  SimulationReport report;
  report.runs = runs;
  if (keepRunCosts) report.runCosts.reserve(runs);

  double sum = 0.0;
  double sumSquares = 0.0;
  for (std::int64_t run = 0; run < runs; ++run) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(run));
    double cost = 0.0;
    double position = instance.initialInventory;
    std::size_t nextReview = 0;
    for (int t = 1; t <= instance.periods; ++t) {
      if (nextReview < policy.reviews.size() && policy.reviews[nextReview].period == t) {
        const PolicyReview& review = policy.reviews[nextReview];
        ++nextReview;
        cost += instance.reviewCost;
        if (review.hasOrderRegion && position <= review.reorderLevel) {
          cost += instance.fixedOrderCost + instance.unitCost * (review.orderUpTo - position);
          position = review.orderUpTo;
        }
      }
      position -= samplePoisson(instance.demandMeans[t - 1], rng);
      cost += instance.holdingCost * std::max(position, 0.0) +
              instance.penaltyCost * std::max(-position, 0.0);
    }
    sum += cost;
    sumSquares += cost * cost;
    if (keepRunCosts) report.runCosts.push_back(cost);
  }

  report.meanCost = sum / static_cast<double>(runs);
  if (runs > 1) {
    const double n = static_cast<double>(runs);
    const double variance = std::max(0.0, (sumSquares - n * report.meanCost * report.meanCost) /
                                              (n - 1.0));
    report.stdError = std::sqrt(variance / n);
  }
  return report;
}

}  // namespace rss
