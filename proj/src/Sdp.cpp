#include "rss/Sdp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rss/Errors.hpp"

namespace rss {

int ReviewPlan::reviewCount() const {
  int count = 0;
  for (auto g : gamma) count += g != 0;
  return count;
}

std::string ReviewPlan::toString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (i > 0) out += ",";
    out += gamma[i] ? '1' : '0';
  }
  out += ")";
  return out;
}

ReviewPlan ReviewPlan::fromMask(std::uint64_t mask, int periods) {
  ReviewPlan plan;
  plan.gamma.resize(periods);
  for (int t = 1; t <= periods; ++t) {
    plan.gamma[t - 1] = static_cast<std::uint8_t>((mask >> (periods - t)) & 1u);
  }
  return plan;
}

std::uint64_t ReviewPlan::toMask() const {
  std::uint64_t mask = 0;
  const int periods = this->periods();
  for (int t = 1; t <= periods; ++t) {
    if (gamma[t - 1]) mask |= std::uint64_t{1} << (periods - t);
  }
  return mask;
}

SdpSolver::SdpSolver(Instance instance, SolverConfig config)
    : instance_(std::move(instance)), config_(config) {
  instance_.validate();
  demands_.reserve(instance_.periods);
  for (double mean : instance_.demandMeans) {
    demands_.push_back(truncatedPoissonPmf(mean, instance_.pmfEpsilon));
  }
  grid_ = buildGrid(instance_, demands_, config_.maxStatesPerStage);
  buildLossRows();
}

void SdpSolver::buildLossRows() {
  // L_t(y) = h E[(y-D)+] + b E[(D-y)+] computed by one CDF sweep per period,
  // using E[(y-D)+] = sum_{j<y} P(D <= j) and E[(D-y)+] = mean - y + E[(y-D)+]
  lossRows_.resize(instance_.periods);
  const double h = instance_.holdingCost;
  const double b = instance_.penaltyCost;
  for (int t = 1; t <= instance_.periods; ++t) {
    const auto& dist = demands_[t - 1];
    const int low = grid_.lowAt(t);
    auto& row = lossRows_[t - 1];
    row.resize(grid_.maxLevel - low + 1);
    double cdf = 0.0;        // P(D <= y-1), zero because low <= 0
    double partial = 0.0;    // E[(y-D)+]
    for (int y = low; y <= grid_.maxLevel; ++y) {
      const double shortfall = std::max(0.0, dist.mean - y + partial);
      row[y - low] = h * partial + b * shortfall;
      if (y >= 0 && y <= dist.supportMax) cdf += dist.pmf[y];
      partial += cdf;
    }
  }
}

double SdpSolver::periodLoss(int period, int position) const {
  const int low = grid_.lowAt(period);
  assert(position >= low && position <= grid_.maxLevel);
  return lossRows_[period - 1][position - low];
}

StageValues SdpSolver::boundaryStage() const {
  StageValues stage;
  stage.period = instance_.periods + 1;
  stage.lowLevel = grid_.lowAt(stage.period);
  stage.cost.assign(grid_.maxLevel - stage.lowLevel + 1, 0.0);
  stage.orderQty.assign(stage.cost.size(), 0);
  stage.minCost = 0.0;
  return stage;
}

int SdpSolver::carryOver(int position) const {
  if (position >= 0) return position;
  const double beta = instance_.backorderFraction;
  if (beta == 1.0 && !config_.forcePartialBackorderPath) return position;
  return static_cast<int>(std::llround(beta * position));
}

StageValues SdpSolver::solveStage(int period, const StageValues& next, bool review) const {
  assert(period >= 1 && period <= instance_.periods);
  assert(next.period == period + 1);
  assert(next.lowLevel == grid_.lowAt(period + 1));
  ++stageSolveCount_;

  const int low = grid_.lowAt(period);
  const int size = grid_.maxLevel - low + 1;
  const auto& dist = demands_[period - 1];
  const auto& loss = lossRows_[period - 1];

  // G(y): expected period cost plus continuation at post-order position y
  std::vector<double> postCost(size);
  const bool plainBacklog =
      instance_.backorderFraction == 1.0 && !config_.forcePartialBackorderPath;
  for (int y = low; y <= grid_.maxLevel; ++y) {
    double continuation = 0.0;
    if (plainBacklog) {
      const double* base = next.cost.data() + (y - next.lowLevel);
      for (int d = 0; d <= dist.supportMax; ++d) continuation += dist.pmf[d] * base[-d];
    } else {
      for (int d = 0; d <= dist.supportMax; ++d) {
        continuation += dist.pmf[d] * next.cost[carryOver(y - d) - next.lowLevel];
      }
    }
    postCost[y - low] = loss[y - low] + continuation;
  }

  StageValues stage;
  stage.period = period;
  stage.lowLevel = low;
  stage.cost.resize(size);
  stage.orderQty.assign(size, 0);

  if (!review) {
    stage.cost = postCost;
  } else {
    const double reviewCost = instance_.reviewCost;
    const double orderCost = instance_.fixedOrderCost;
    const double v = instance_.unitCost;
    const bool useUnitCost = v != 0.0 || config_.forceUnitCostPath;

    if (config_.exploitOrderUpToStructure && instance_.backorderFraction == 1.0) {
      // single sweep: the stage cost is K-convex in the post-order position,
      // so one global order-up-to level serves every ordering state
      if (!useUnitCost) {
        int upTo = 0;
        double upToValue = postCost[0];
        for (int i = 1; i < size; ++i) {
          if (postCost[i] < upToValue) {
            upToValue = postCost[i];
            upTo = i;
          }
        }
        const double orderValue = orderCost + upToValue;
        for (int i = 0; i < size; ++i) {
          if (i < upTo && orderValue < postCost[i]) {
            stage.cost[i] = reviewCost + orderValue;
            stage.orderQty[i] = upTo - i;
          } else {
            stage.cost[i] = reviewCost + postCost[i];
          }
        }
      } else {
        std::vector<double> shifted(size);
        for (int i = 0; i < size; ++i) shifted[i] = v * (low + i) + postCost[i];
        int upTo = 0;
        double upToValue = shifted[0];
        for (int i = 1; i < size; ++i) {
          if (shifted[i] < upToValue) {
            upToValue = shifted[i];
            upTo = i;
          }
        }
        for (int i = 0; i < size; ++i) {
          const double orderValue = orderCost + upToValue - v * (low + i);
          if (i < upTo && orderValue < postCost[i]) {
            stage.cost[i] = reviewCost + orderValue;
            stage.orderQty[i] = upTo - i;
          } else {
            stage.cost[i] = reviewCost + postCost[i];
          }
        }
      }
    } else {
      // exhaustive minimisation over the order quantity, smallest Q on ties
      for (int i = 0; i < size; ++i) {
        double best = postCost[i];
        int bestQty = 0;
        for (int j = i + 1; j < size; ++j) {
          const double candidate = orderCost + v * (j - i) + postCost[j];
          if (candidate < best) {
            best = candidate;
            bestQty = j - i;
          }
        }
        stage.cost[i] = reviewCost + best;
        stage.orderQty[i] = bestQty;
      }
    }
  }

  stage.minCost = std::numeric_limits<double>::infinity();
  for (double c : stage.cost) stage.minCost = std::min(stage.minCost, c);
  return stage;
}

std::pair<ValueFunction, double> SdpSolver::solveFixedPlan(const ReviewPlan& plan) const {
  if (plan.periods() != instance_.periods) {
    throw std::invalid_argument("solveFixedPlan: plan length must equal the horizon");
  }
  ValueFunction vf;
  vf.stages.resize(instance_.periods + 1);
  vf.stages[instance_.periods] = boundaryStage();
  for (int t = instance_.periods; t >= 1; --t) {
    vf.stages[t - 1] = solveStage(t, vf.stages[t], plan.reviewAt(t));
  }
  const double expectedCost = vf.stages[0].costAt(instance_.initialInventory);
  return {std::move(vf), expectedCost};
}

double SdpSolver::immediateCost(int period, int opening, int orderQty, bool review) const {
  if (orderQty < 0) throw std::invalid_argument("immediateCost: order quantity must be >= 0");
  if (orderQty > 0 && !review) {
    throw std::logic_error("immediateCost: ordering outside a review period");
  }
  const int position = opening + orderQty;
  if (position < grid_.minLevel || position > grid_.maxLevel) {
    throw std::invalid_argument("immediateCost: post-order position outside the grid");
  }
  const auto& dist = demands_[period - 1];
  double expected = 0.0;
  for (int d = 0; d <= dist.supportMax; ++d) {
    expected += dist.pmf[d] * (instance_.holdingCost * std::max(position - d, 0) +
                               instance_.penaltyCost * std::max(d - position, 0));
  }
  double cost = expected;
  if (review) cost += instance_.reviewCost;
  if (orderQty > 0) cost += instance_.fixedOrderCost + instance_.unitCost * orderQty;
  return cost;
}

Policy extractPolicy(const SdpSolver& solver, const ValueFunction& valueFunction,
                     const ReviewPlan& plan) {
  if (solver.instance().backorderFraction < 1.0) {
    throw std::invalid_argument(
        "extractPolicy: (s,S) extraction requires full backlogging (beta = 1)");
  }
  if (plan.periods() != solver.instance().periods) {
    throw std::invalid_argument("extractPolicy: plan length must equal the horizon");
  }

  Policy policy;
  for (int t = 1; t <= plan.periods(); ++t) {
    if (!plan.reviewAt(t)) continue;
    const StageValues& stage = valueFunction.stage(t);

    PolicyReview review;
    review.period = t;

    int reorder = stage.lowLevel - 1;
    int upTo = 0;
    bool seenOrder = false;
    for (int i = 0; i < stage.levelCount(); ++i) {
      if (stage.orderQty[i] <= 0) continue;
      const int level = stage.lowLevel + i;
      const int target = level + stage.orderQty[i];
      if (!seenOrder) {
        seenOrder = true;
        upTo = target;
      } else if (target != upTo) {
        throw StructureViolationError(
            "extractPolicy: order-up-to level is not constant at period " + std::to_string(t));
      }
      reorder = std::max(reorder, level);
    }

    if (seenOrder) {
      // the order region must be exactly the levels at or below s
      for (int i = 0; i < stage.levelCount(); ++i) {
        const int level = stage.lowLevel + i;
        const bool orders = stage.orderQty[i] > 0;
        if (orders != (level <= reorder)) {
          throw StructureViolationError(
              "extractPolicy: action table is not threshold-shaped at period " +
              std::to_string(t));
        }
      }
      review.hasOrderRegion = true;
      review.reorderLevel = reorder;
      review.orderUpTo = upTo;
    }
    policy.reviews.push_back(review);
  }
  return policy;
}

}  // namespace rss
