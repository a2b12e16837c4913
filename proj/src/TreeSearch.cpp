#include "rss/TreeSearch.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <string>

#include "rss/Errors.hpp"

namespace rss {

DescentStrategy DescentStrategy::deterministic(DescentOrder order) {
  DescentStrategy s;
  s.kind = Kind::Deterministic;
  s.order = order;
  return s;
}

DescentStrategy DescentStrategy::randomized(std::uint64_t seed) {
  DescentStrategy s;
  s.kind = Kind::Randomized;
  s.seed = seed;
  return s;
}

DescentStrategy DescentStrategy::guided(ReviewPlan plan, std::uint64_t seed) {
  DescentStrategy s;
  s.kind = Kind::Guided;
  s.seed = seed;
  s.guidePlan = std::move(plan);
  return s;
}

BaselineResult enumerateBaseline(const SdpSolver& solver, int horizonCap) {
  const int periods = solver.instance().periods;
  if (periods > horizonCap) {
    throw ResourceLimitError("enumerateBaseline: horizon " + std::to_string(periods) +
                             " exceeds the enumeration cap of " + std::to_string(horizonCap));
  }
  BaselineResult result;
  const std::uint64_t planCount = std::uint64_t{1} << periods;
  result.allCosts.resize(planCount);
  for (std::uint64_t mask = 0; mask < planCount; ++mask) {
    const ReviewPlan plan = ReviewPlan::fromMask(mask, periods);
    const double cost = solver.solveFixedPlan(plan).second;
    result.allCosts[mask] = cost;
    if (cost < result.bestCost) {
      result.bestCost = cost;
      result.bestPlan = plan;
    }
  }
  return result;
}

double nodeBoundValue(const StageValues& stage, const BoundTable::Row* mcRow) {
  if (mcRow == nullptr) return stage.minCost;
  const int from = std::max(stage.lowLevel, mcRow->lowLevel);
  const int maxLevel = stage.lowLevel + stage.levelCount() - 1;
  double best = std::numeric_limits<double>::infinity();
  for (int level = from; level <= maxLevel; ++level) {
    best = std::min(best, stage.cost[level - stage.lowLevel] +
                              mcRow->pairing[level - mcRow->lowLevel]);
  }
  return best;
}

bool nodeBoundCheck(const StageValues& stage, const BoundTable::Row* mcRow, double incumbent) {
  return nodeBoundValue(stage, mcRow) >= incumbent;
}

namespace {

class BnbSearch {
 public:
  BnbSearch(const SdpSolver& solver, const DescentStrategy& strategy, bool useMcBounds,
            StageObserver observer)
      : solver_(solver),
        strategy_(strategy),
        observer_(std::move(observer)),
        rng_(strategy.seed),
        gamma_(solver.instance().periods, 0) {
    if (useMcBounds) bounds_ = computeMcBounds(solver);
    if (strategy_.kind == DescentStrategy::Kind::Guided &&
        strategy_.guidePlan.periods() != solver.instance().periods) {
      throw std::invalid_argument("bnbSolve: guide plan length must equal the horizon");
    }
  }

  BnbResult run() {
    const StageValues root = solver_.boundaryStage();
    visit(root);

    BnbResult result;
    result.bestPlan = bestPlan_;
    result.bestCost = incumbent_;
    result.stats = std::move(stats_);
    result.stats.totalNodes = (std::int64_t{1} << (solver_.instance().periods + 1)) - 2;
    if (solver_.instance().backorderFraction == 1.0) {
      const auto solved = solver_.solveFixedPlan(bestPlan_);
      result.policy = extractPolicy(solver_, solved.first, bestPlan_);
    }
    return result;
  }

 private:
  void visit(const StageValues& stage) {
    const int t = stage.period;
    if (t == 1) {
      const double leafCost = stage.costAt(solver_.instance().initialInventory);
      if (leafCost < incumbent_) {
        incumbent_ = leafCost;
        bestPlan_ = ReviewPlan(gamma_);
        stats_.incumbentTrace.emplace_back(bestPlan_, leafCost);
      }
      firstLeafDone_ = true;
      return;
    }

    if (t <= solver_.instance().periods) {
      const BoundTable::Row* row = bounds_ ? &bounds_->row(t - 1) : nullptr;
      const double bound = nodeBoundValue(stage, row);
      if (bound >= incumbent_) {
        stats_.nodesPruned += (std::int64_t{1} << t) - 2;
        stats_.pruneTrace.push_back({t, bound});
        return;
      }
    }

    const int branchPeriod = t - 1;
    std::uint8_t first;
    switch (strategy_.kind) {
      case DescentStrategy::Kind::Deterministic:
        first = strategy_.order == DescentOrder::OneFirst ? 1 : 0;
        break;
      case DescentStrategy::Kind::Guided:
        first = firstLeafDone_ ? static_cast<std::uint8_t>(rng_() & 1)
                               : strategy_.guidePlan.gamma[branchPeriod - 1];
        break;
      case DescentStrategy::Kind::Randomized:
      default:
        first = static_cast<std::uint8_t>(rng_() & 1);
        break;
    }

    const std::uint8_t order[2] = {first, static_cast<std::uint8_t>(1 - first)};
    for (std::uint8_t g : order) {
      gamma_[branchPeriod - 1] = g;
      const StageValues child = solver_.solveStage(branchPeriod, stage, g != 0);
      ++stats_.nodesComputed;
      if (observer_) observer_(child, stage);
      visit(child);
    }
  }

  const SdpSolver& solver_;
  const DescentStrategy& strategy_;
  StageObserver observer_;
  std::optional<BoundTable> bounds_;
  std::mt19937_64 rng_;
  std::vector<std::uint8_t> gamma_;
  bool firstLeafDone_ = false;
  double incumbent_ = std::numeric_limits<double>::infinity();
  ReviewPlan bestPlan_;
  SearchStats stats_;
};

}  // namespace

BnbResult bnbSolve(const SdpSolver& solver, const DescentStrategy& strategy, bool useMcBounds,
                   StageObserver observer) {
  BnbSearch search(solver, strategy, useMcBounds, std::move(observer));
  return search.run();
}

}  // namespace rss
