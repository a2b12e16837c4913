#ifndef RSS_TREE_SEARCH_HPP
#define RSS_TREE_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "rss/LowerBounds.hpp"
#include "rss/Sdp.hpp"

namespace rss {

/// Order in which the two children of a branching node are explored.
enum class DescentOrder { OneFirst, ZeroFirst };

/// How the depth-first search orders its descents.
struct DescentStrategy {
  enum class Kind { Deterministic, Randomized, Guided };

  Kind kind = Kind::Deterministic;
  DescentOrder order = DescentOrder::OneFirst;
  std::uint64_t seed = 0;
  ReviewPlan guidePlan;  // Guided: followed until the first leaf, then randomised

  static DescentStrategy deterministic(DescentOrder order = DescentOrder::OneFirst);
  static DescentStrategy randomized(std::uint64_t seed);
  static DescentStrategy guided(ReviewPlan plan, std::uint64_t seed = 0);
};

/// Search accounting. A visited node counts as computed (one SDP stage);
/// when the bound test fires at a node, all its unvisited descendants count
/// as pruned.
struct SearchStats {
  std::int64_t nodesComputed = 0;
  std::int64_t nodesPruned = 0;
  std::int64_t totalNodes = 0;  // 2^(T+1) - 2 non-root nodes

  struct PruneEvent {
    int period = 0;          // stage of the node where the test fired
    double boundValue = 0.0;
  };

  std::vector<std::pair<ReviewPlan, double>> incumbentTrace;
  std::vector<PruneEvent> pruneTrace;

  double pruningPctVisited() const {
    const double denom = static_cast<double>(nodesComputed + nodesPruned);
    return denom > 0.0 ? 100.0 * static_cast<double>(nodesPruned) / denom : 0.0;
  }
  double pruningPctFullTree() const {
    return totalNodes > 0 ? 100.0 * static_cast<double>(nodesPruned) / static_cast<double>(totalNodes)
                          : 0.0;
  }
};

struct BnbResult {
  ReviewPlan bestPlan;
  double bestCost = std::numeric_limits<double>::infinity();
  Policy policy;  // extracted for beta = 1, empty otherwise
  SearchStats stats;
};

struct BaselineResult {
  ReviewPlan bestPlan;
  double bestCost = std::numeric_limits<double>::infinity();
  std::vector<double> allCosts;  // indexed by ReviewPlan::fromMask masks
};

/// Called for every computed node with its stage and the parent stage.
using StageObserver = std::function<void(const StageValues& node, const StageValues& parent)>;

/// Solves the fixed-plan SDP for every one of the 2^T review plans.
/// Throws ResourceLimitError beyond horizonCap periods.
BaselineResult enumerateBaseline(const SdpSolver& solver, int horizonCap = 20);

/// Depth-first branch-and-bound over review plans. The root branches on
/// gamma_T; each node solves one SDP stage on top of its parent's stages.
/// With useMcBounds the pruning test adds the MC row of the previous
/// period to the stage costs; without it the stage minimum alone is used.
BnbResult bnbSolve(const SdpSolver& solver, const DescentStrategy& strategy,
                   bool useMcBounds = true, StageObserver observer = StageObserver());

/// min over the shared band of stage cost plus bound row (the row may be
/// null, which stands for MC = 0).
double nodeBoundValue(const StageValues& stage, const BoundTable::Row* mcRow);

/// True when the node's subtree can be discarded: bound value >= incumbent.
bool nodeBoundCheck(const StageValues& stage, const BoundTable::Row* mcRow, double incumbent);

}  // namespace rss

#endif  // RSS_TREE_SEARCH_HPP
