#ifndef RSS_RS_GUIDANCE_HPP
#define RSS_RS_GUIDANCE_HPP

#include <utility>
#include <vector>

#include "rss/Sdp.hpp"

namespace rss {

/// Cost and order-up-to level of one replenishment cycle.
struct CycleCost {
  double cost = 0.0;
  int orderUpTo = 0;
};

/// Minimal expected cost of a replenishment cycle covering periods
/// firstPeriod..endPeriod-1: one review and order at the start, then no
/// reviews until endPeriod. Demand over the cycle is the convolution of the
/// truncated per-period pmfs, re-truncated at the instance epsilon.
///
/// The first cycle accounts for the initial inventory: the order-up-to
/// level is at least I0 and the fixed ordering cost is waived when the
/// level stays at I0.
CycleCost cycleCost(const SdpSolver& solver, int firstPeriod, int endPeriod);

/// All cycle costs c[i][j] plus the costs of leaving a prefix of the
/// horizon unreviewed (inventory drains from I0 with no order).
class CycleCostCache {
 public:
  explicit CycleCostCache(const SdpSolver& solver);

  int periods() const { return periods_; }
  double cost(int firstPeriod, int endPeriod) const;
  int orderUpTo(int firstPeriod, int endPeriod) const;
  /// Cost of periods 1..endPeriod-1 without any review; 0 for endPeriod = 1.
  double noReviewCost(int endPeriod) const;

 private:
  int periods_ = 0;
  std::vector<std::vector<CycleCost>> cycles_;  // [i-1][j-i-1]
  std::vector<double> noReview_;                // [j-1]
};

/// Cycle-model cost of an arbitrary plan: unreviewed prefix plus the chain
/// of reviewed cycles.
double cyclePlanCost(const CycleCostCache& cache, const ReviewPlan& plan);

/// Near-optimal review plan: shortest path over cycle costs from period 1
/// to the horizon end. Ties break toward the longer first cycle, and toward
/// no review when an unreviewed stretch matches a reviewed cycle exactly.
ReviewPlan computeRsPlan(const SdpSolver& solver);
ReviewPlan computeRsPlan(const CycleCostCache& cache);

}  // namespace rss

#endif  // RSS_RS_GUIDANCE_HPP
