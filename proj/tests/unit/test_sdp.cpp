#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rss/Errors.hpp"
#include "rss/Sdp.hpp"

using namespace rss;

namespace {

Instance toyInstance() {
  Instance instance;
  instance.periods = 3;
  instance.demandMeans = {20, 30, 40};
  instance.fixedOrderCost = 30;
  instance.reviewCost = 10;
  instance.holdingCost = 1;
  instance.penaltyCost = 10;
  return instance;
}

Instance randomInstance(std::uint64_t seed, int periods, double meanLo = 10.0,
                        double meanHi = 60.0) {
  std::mt19937_64 rng(seed);
  auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  Instance instance;
  instance.periods = periods;
  for (int t = 0; t < periods; ++t) {
    instance.demandMeans.push_back(meanLo + (meanHi - meanLo) * uniform());
  }
  instance.fixedOrderCost = 40.0 + 200.0 * uniform();
  instance.reviewCost = 40.0 + 200.0 * uniform();
  instance.holdingCost = 1.0;
  instance.penaltyCost = 4.0 + 12.0 * uniform();
  return instance;
}

ReviewPlan randomPlan(std::uint64_t seed, int periods) {
  std::mt19937_64 rng(seed);
  ReviewPlan plan;
  for (int t = 0; t < periods; ++t) plan.gamma.push_back(rng() & 1);
  return plan;
}

bool bitIdentical(const ValueFunction& a, const ValueFunction& b) {
  if (a.stages.size() != b.stages.size()) return false;
  for (std::size_t i = 0; i < a.stages.size(); ++i) {
    const auto& x = a.stages[i];
    const auto& y = b.stages[i];
    if (x.lowLevel != y.lowLevel || x.cost.size() != y.cost.size()) return false;
    if (std::memcmp(x.cost.data(), y.cost.data(), x.cost.size() * sizeof(double)) != 0) {
      return false;
    }
    if (x.orderQty != y.orderQty) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("sdp") {

TEST_CASE("grid covers reachable states") {
  SUBCASE("toy instance") {
    SdpSolver solver(toyInstance());
    int supportSum = 0;
    for (const auto& d : solver.demands()) supportSum += d.supportMax;
    CHECK(solver.grid().minLevel <= -solver.demands()[2].supportMax);
    CHECK(solver.grid().maxLevel >= supportSum);
    CHECK(solver.grid().lowAt(1) == 0);
    CHECK(solver.grid().lowAt(4) == solver.grid().minLevel);
  }
  SUBCASE("zero demand collapses to a point") {
    Instance inst;
    inst.periods = 2;
    inst.demandMeans = {0, 0};
    const auto grid = buildGrid(inst);
    CHECK(grid.minLevel == 0);
    CHECK(grid.maxLevel == 0);
  }
  SUBCASE("positive initial inventory is on the grid") {
    Instance inst;
    inst.periods = 2;
    inst.demandMeans = {0, 0};
    inst.initialInventory = 100;
    const auto grid = buildGrid(inst);
    CHECK(grid.minLevel <= 0);
    CHECK(grid.maxLevel >= 100);
  }
  SUBCASE("state cap is enforced") {
    Instance inst = toyInstance();
    CHECK_THROWS_AS(buildGrid(inst, 10), ResourceLimitError);
  }
}

TEST_CASE("immediate cost") {
  Instance inst;
  inst.periods = 1;
  inst.demandMeans = {0};
  inst.reviewCost = 10;
  inst.fixedOrderCost = 30;
  inst.holdingCost = 1;
  inst.penaltyCost = 10;
  SdpSolver zero(inst);
  CHECK(zero.immediateCost(1, 0, 0, false) == 0.0);
  CHECK(zero.immediateCost(1, 0, 0, true) == 10.0);
  CHECK_THROWS_AS(zero.immediateCost(1, 0, 5, false), std::logic_error);

  // toy: review + order of 20 at opening 0 against the truncated Poisson(20)
  SdpSolver toy(toyInstance());
  const auto& dist = toy.demands()[0];
  double expected = 0.0;
  for (int d = 0; d <= dist.supportMax; ++d) {
    expected += dist.pmf[d] * (1.0 * std::max(20 - d, 0) + 10.0 * std::max(d - 20, 0));
  }
  CHECK(toy.immediateCost(1, 0, 20, true) == doctest::Approx(10 + 30 + expected).epsilon(1e-12));
}

TEST_CASE("fixed-plan costs reproduce the worked example") {
  SdpSolver solver(toyInstance());
  CHECK(solver.solveFixedPlan(ReviewPlan({1, 0, 1})).second == doctest::Approx(142.7).epsilon(4e-4));
  CHECK(solver.solveFixedPlan(ReviewPlan({0, 0, 0})).second == doctest::Approx(1600.0).epsilon(4e-5));
  CHECK(solver.solveFixedPlan(ReviewPlan({1, 1, 1})).second == doctest::Approx(150.4).epsilon(4e-4));
}

TEST_CASE("single period without demand or reviews costs nothing") {
  Instance inst;
  inst.periods = 1;
  inst.demandMeans = {0};
  inst.reviewCost = 10;
  SdpSolver solver(inst);
  CHECK(solver.solveFixedPlan(ReviewPlan({0})).second == 0.0);
}

TEST_CASE("boundary stage is identically zero") {
  SdpSolver solver(toyInstance());
  const auto boundary = solver.boundaryStage();
  CHECK(boundary.period == 4);
  for (double c : boundary.cost) CHECK(c == 0.0);
  CHECK(boundary.minCost == 0.0);
}

TEST_CASE("last-stage review with free ordering is the newsvendor sweep") {
  Instance inst = toyInstance();
  inst.reviewCost = 0;
  inst.fixedOrderCost = 0;
  SdpSolver solver(inst);
  const auto stage = solver.solveStage(3, solver.boundaryStage(), true);
  // oracle: min over order-up-to levels of the expected one-period loss
  for (int level = stage.lowLevel; level <= solver.grid().maxLevel; level += 7) {
    double best = std::numeric_limits<double>::infinity();
    for (int y = level; y <= solver.grid().maxLevel; ++y) {
      best = std::min(best, solver.immediateCost(3, level, y - level, true));
    }
    CHECK(stage.costAt(level) == doctest::Approx(best).epsilon(1e-9));
  }
}

TEST_CASE("non-review stage forces a zero order") {
  SdpSolver solver(toyInstance());
  const auto stage = solver.solveStage(3, solver.boundaryStage(), false);
  for (int qty : stage.orderQty) CHECK(qty == 0);
  CHECK(stage.costAt(40) ==
        doctest::Approx(solver.immediateCost(3, 40, 0, false)).epsilon(1e-12));
}

TEST_CASE("structured sweep equals exhaustive minimisation") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Instance inst = randomInstance(100 + seed, 4);
    SolverConfig slow;
    slow.exploitOrderUpToStructure = false;
    SdpSolver fastSolver(inst);
    SdpSolver slowSolver(inst, slow);
    const ReviewPlan plan = randomPlan(seed, 4);
    const auto fast = fastSolver.solveFixedPlan(plan);
    const auto exhaustive = slowSolver.solveFixedPlan(plan);
    CHECK(fast.second == doctest::Approx(exhaustive.second).epsilon(1e-12));
    for (int t = 1; t <= 4; ++t) {
      const auto& a = fast.first.stage(t);
      const auto& b = exhaustive.first.stage(t);
      for (std::size_t i = 0; i < a.cost.size(); ++i) {
        REQUIRE(std::abs(a.cost[i] - b.cost[i]) <= 1e-9);
        REQUIRE(a.orderQty[i] == b.orderQty[i]);
      }
    }
  }
}

TEST_CASE("review actions are threshold-shaped") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Instance inst = randomInstance(200 + seed, 5);
    SdpSolver solver(inst);
    const ReviewPlan plan({1, 0, 1, 1, 0});
    const auto vf = solver.solveFixedPlan(plan).first;
    for (int t : {1, 3, 4}) {
      const auto& stage = vf.stage(t);
      int threshold = stage.lowLevel - 1;
      for (int i = 0; i < stage.levelCount(); ++i) {
        if (stage.orderQty[i] > 0) threshold = stage.lowLevel + i;
      }
      for (int i = 0; i < stage.levelCount(); ++i) {
        const bool orders = stage.orderQty[i] > 0;
        REQUIRE(orders == (stage.lowLevel + i <= threshold));
      }
    }
  }
}

TEST_CASE("policy extraction matches an action-table scan") {
  SdpSolver solver(toyInstance());
  const ReviewPlan plan({1, 0, 1});
  const auto vf = solver.solveFixedPlan(plan).first;
  const Policy policy = extractPolicy(solver, vf, plan);
  REQUIRE(policy.reviews.size() == 2);
  CHECK(policy.reviews[0].period == 1);
  CHECK(policy.reviews[1].period == 3);

  for (const auto& review : policy.reviews) {
    REQUIRE(review.hasOrderRegion);
    CHECK(review.reorderLevel < review.orderUpTo);
    const auto& stage = vf.stage(review.period);
    int scanReorder = stage.lowLevel - 1;
    int scanUpTo = 0;
    for (int i = 0; i < stage.levelCount(); ++i) {
      if (stage.orderQty[i] > 0) {
        scanReorder = std::max(scanReorder, stage.lowLevel + i);
        scanUpTo = stage.lowLevel + i + stage.orderQty[i];
      }
    }
    CHECK(review.reorderLevel == scanReorder);
    CHECK(review.orderUpTo == scanUpTo);
  }
}

TEST_CASE("policy extraction edge cases") {
  SUBCASE("no reviews gives an empty policy") {
    SdpSolver solver(toyInstance());
    const ReviewPlan plan({0, 0, 0});
    const auto vf = solver.solveFixedPlan(plan).first;
    CHECK(extractPolicy(solver, vf, plan).reviews.empty());
  }
  SUBCASE("zero demand with a fixed order cost never orders") {
    Instance inst;
    inst.periods = 3;
    inst.demandMeans = {0, 0, 0};
    inst.fixedOrderCost = 30;
    inst.reviewCost = 10;
    inst.holdingCost = 1;
    inst.penaltyCost = 10;
    SdpSolver solver(inst);
    const ReviewPlan plan({1, 1, 1});
    const auto vf = solver.solveFixedPlan(plan).first;
    for (const auto& review : extractPolicy(solver, vf, plan).reviews) {
      CHECK_FALSE(review.hasOrderRegion);
    }
  }
  SUBCASE("partial backordering is refused") {
    Instance inst = toyInstance();
    inst.backorderFraction = 0.5;
    SdpSolver solver(inst);
    const ReviewPlan plan({1, 0, 1});
    const auto vf = solver.solveFixedPlan(plan).first;
    CHECK_THROWS_AS(extractPolicy(solver, vf, plan), std::invalid_argument);
  }
}

TEST_CASE("full backlog through the partial-backorder transition is bit-identical") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = randomInstance(300 + seed, 4);
    SolverConfig forced;
    forced.forcePartialBackorderPath = true;
    SdpSolver plain(inst);
    SdpSolver general(inst, forced);
    const ReviewPlan plan = randomPlan(40 + seed, 4);
    const auto a = plain.solveFixedPlan(plan);
    const auto b = general.solveFixedPlan(plan);
    CHECK(a.second == b.second);
    CHECK(bitIdentical(a.first, b.first));
  }
}

TEST_CASE("zero unit cost through the unit-cost algebra is bit-identical") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Instance inst = randomInstance(400 + seed, 4);
    SolverConfig forced;
    forced.forceUnitCostPath = true;
    SdpSolver plain(inst);
    SdpSolver general(inst, forced);
    const ReviewPlan plan = randomPlan(50 + seed, 4);
    const auto a = plain.solveFixedPlan(plan);
    const auto b = general.solveFixedPlan(plan);
    CHECK(a.second == b.second);
    CHECK(bitIdentical(a.first, b.first));
  }
}

TEST_CASE("unit cost never lowers the fixed-plan cost") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Instance inst = randomInstance(500 + seed, 4);
    const ReviewPlan plan({1, 0, 1, 0});
    double previous = -1.0;
    for (double v : {0.0, 1.0, 2.0}) {
      inst.unitCost = v;
      const double cost = SdpSolver(inst).solveFixedPlan(plan).second;
      CHECK(cost >= previous);
      previous = cost;
    }
  }
}

TEST_CASE("stage minima fall toward the horizon for any fixed plan") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Instance inst = randomInstance(600 + seed, 5);
    SdpSolver solver(inst);
    const auto vf = solver.solveFixedPlan(randomPlan(60 + seed, 5)).first;
    for (int t = 2; t <= 5; ++t) {
      CHECK(vf.stage(t).minCost <= vf.stage(t - 1).minCost + 1e-9);
    }
  }
}

TEST_CASE("partial backordering shrinks the carried backlog") {
  Instance inst = toyInstance();
  inst.backorderFraction = 0.0;  // lost sales
  SdpSolver lost(inst);
  SdpSolver backlog(toyInstance());
  const ReviewPlan plan({0, 0, 0});
  // with no orders, lost sales stop the backlog from compounding
  CHECK(lost.solveFixedPlan(plan).second < backlog.solveFixedPlan(plan).second);
}

}  // TEST_SUITE
