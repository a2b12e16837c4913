#ifndef RSS_SDP_HPP
#define RSS_SDP_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rss/Demand.hpp"
#include "rss/Grid.hpp"
#include "rss/Instance.hpp"

namespace rss {

/// Binary review plan: gamma[t-1] = 1 when period t is a review moment.
struct ReviewPlan {
  std::vector<std::uint8_t> gamma;

  ReviewPlan() = default;
  explicit ReviewPlan(std::vector<std::uint8_t> g) : gamma(std::move(g)) {}

  int periods() const { return static_cast<int>(gamma.size()); }
  bool reviewAt(int period) const { return gamma[period - 1] != 0; }
  int reviewCount() const;
  std::string toString() const;  // e.g. "(1,0,1)"

  /// Plan from a bitmask where gamma_1 occupies the most significant of the
  /// `periods` low bits, so masks enumerate plans in lexicographic order.
  static ReviewPlan fromMask(std::uint64_t mask, int periods);
  std::uint64_t toMask() const;

  bool operator==(const ReviewPlan& other) const { return gamma == other.gamma; }
};

/// Cost-to-go and optimal actions of one DP stage over the grid band
/// [lowLevel, grid.maxLevel]. Index i holds opening level lowLevel + i.
struct StageValues {
  int period = 1;  // t in 1..T+1; T+1 is the all-zero boundary stage
  int lowLevel = 0;
  std::vector<double> cost;
  std::vector<int> orderQty;  // optimal order quantity, 0 when no order
  double minCost = std::numeric_limits<double>::infinity();

  int levelCount() const { return static_cast<int>(cost.size()); }
  double costAt(int level) const { return cost[level - lowLevel]; }
  int orderQtyAt(int level) const { return orderQty[level - lowLevel]; }
};

/// Solved stages for a fixed plan, indexed by period (stages[t-1], t=1..T+1).
struct ValueFunction {
  std::vector<StageValues> stages;

  const StageValues& stage(int period) const { return stages[period - 1]; }
};

/// One review moment of an extracted policy. When hasOrderRegion is false
/// the review never triggers an order on the grid.
struct PolicyReview {
  int period = 1;
  bool hasOrderRegion = false;
  int reorderLevel = 0;  // s: order iff position <= s
  int orderUpTo = 0;     // S
};

/// The (R_t, s_t, S_t) parameters extracted from a solved plan.
struct Policy {
  std::vector<PolicyReview> reviews;
};

struct SolverConfig {
  std::int64_t maxStatesPerStage = 1'000'000;
  /// Use the order-up-to structure of the stage cost to solve each review
  /// stage in one sweep instead of minimising per state. Correctness-
  /// preserving; switch off to force the exhaustive minimisation.
  bool exploitOrderUpToStructure = true;
  /// Route beta = 1 through the general partial-backorder transition
  /// instead of the plain backlog transition (test hook; results match
  /// bit for bit).
  bool forcePartialBackorderPath = false;
  /// Engage the unit-cost algebra even when unitCost is 0 (test hook).
  bool forceUnitCostPath = false;
};

/// Backward-induction solver for a fixed review plan.
///
/// Holds the discretised demands, the inventory grid and the per-period
/// expected holding/penalty cost rows; all stage computations go through it.
class SdpSolver {
 public:
  explicit SdpSolver(Instance instance, SolverConfig config = SolverConfig());

  const Instance& instance() const { return instance_; }
  const SolverConfig& config() const { return config_; }
  const InventoryGrid& grid() const { return grid_; }
  const std::vector<DemandDistribution>& demands() const { return demands_; }

  /// Expected one-period holding + penalty cost of period t at post-order
  /// position `position` (the f-tilde of the lower-bound DP).
  double periodLoss(int period, int position) const;

  /// The all-zero boundary stage t = T+1.
  StageValues boundaryStage() const;

  /// One backward step: stage t from stage t+1, with or without a review.
  StageValues solveStage(int period, const StageValues& next, bool review) const;

  /// Full backward induction; returns the stages and C_1(I0).
  std::pair<ValueFunction, double> solveFixedPlan(const ReviewPlan& plan) const;

  /// Expected immediate cost f_t(opening, Q): review + ordering + expected
  /// holding/penalty over the truncated pmf.
  double immediateCost(int period, int opening, int orderQty, bool review) const;

  /// Number of solveStage calls made through this solver.
  std::int64_t stageSolveCount() const { return stageSolveCount_; }

 private:
  Instance instance_;
  SolverConfig config_;
  std::vector<DemandDistribution> demands_;
  InventoryGrid grid_;
  std::vector<std::vector<double>> lossRows_;  // per period, over [stageLow(t), maxLevel]
  mutable std::int64_t stageSolveCount_ = 0;

  void buildLossRows();
  int carryOver(int position) const;  // post-demand transition under beta
};

/// (s_t, S_t) per review period of a solved plan. Requires beta = 1.
/// Throws StructureViolationError if the action table is not (s,S)-shaped.
Policy extractPolicy(const SdpSolver& solver, const ValueFunction& valueFunction,
                     const ReviewPlan& plan);

}  // namespace rss

#endif  // RSS_SDP_HPP
