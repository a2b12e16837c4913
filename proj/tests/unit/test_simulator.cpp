#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "rss/Simulator.hpp"
#include "rss/TreeSearch.hpp"

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

}  // namespace

TEST_SUITE("simulator") {

TEST_CASE("poisson sampling") {
  std::mt19937_64 rng(1);
  CHECK(samplePoisson(0.0, rng) == 0);
  double sum = 0.0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) sum += samplePoisson(30.0, rng);
  const double mean = sum / draws;
  CHECK(std::abs(mean - 30.0) <= 4.0 * std::sqrt(30.0 / draws));
}

TEST_CASE("empty system simulates to zero") {
  Instance inst;
  inst.periods = 3;
  inst.demandMeans = {0, 0, 0};
  const auto report = simulatePolicy(inst, Policy{}, 100, 1);
  CHECK(report.meanCost == 0.0);
  CHECK(report.stdError == 0.0);
}

TEST_CASE("simulated policies land on the worked-example costs") {
  const Instance inst = toyInstance();
  SdpSolver solver(inst);
  for (std::uint64_t mask : {std::uint64_t{0b101}, std::uint64_t{0b111}}) {
    const ReviewPlan plan = ReviewPlan::fromMask(mask, 3);
    const auto solved = solver.solveFixedPlan(plan);
    const Policy policy = extractPolicy(solver, solved.first, plan);
    const auto report = simulatePolicy(inst, policy, 100000, 99);
    CHECK(std::abs(report.meanCost - solved.second) <= 3.0 * report.stdError + 0.2);
  }
}

TEST_CASE("reports are seed-reproducible") {
  const Instance inst = toyInstance();
  SdpSolver solver(inst);
  const ReviewPlan plan({1, 0, 1});
  const Policy policy = extractPolicy(solver, solver.solveFixedPlan(plan).first, plan);
  const auto a = simulatePolicy(inst, policy, 5000, 7, true);
  const auto b = simulatePolicy(inst, policy, 5000, 7, true);
  CHECK(a.meanCost == b.meanCost);
  CHECK(a.stdError == b.stdError);
  CHECK(a.runCosts == b.runCosts);
  const auto c = simulatePolicy(inst, policy, 5000, 8);
  CHECK(c.meanCost != a.meanCost);
}

TEST_CASE("invalid simulation inputs") {
  const Instance inst = toyInstance();
  Policy outOfHorizon;
  outOfHorizon.reviews.push_back({5, true, 10, 20});
  CHECK_THROWS_AS(simulatePolicy(inst, outOfHorizon, 10, 0), std::invalid_argument);

  Policy unordered;
  unordered.reviews.push_back({2, true, 10, 20});
  unordered.reviews.push_back({2, true, 10, 20});
  CHECK_THROWS_AS(simulatePolicy(inst, unordered, 10, 0), std::invalid_argument);

  CHECK_THROWS_AS(simulatePolicy(inst, Policy{}, 0, 0), std::invalid_argument);

  Instance lostSales = inst;
  lostSales.backorderFraction = 0.5;
  CHECK_THROWS_AS(simulatePolicy(lostSales, Policy{}, 10, 0), std::invalid_argument);
}

TEST_CASE("unit cost is charged on simulated orders") {
  Instance inst = toyInstance();
  SdpSolver solver(inst);
  const ReviewPlan plan({1, 0, 1});
  const Policy policy = extractPolicy(solver, solver.solveFixedPlan(plan).first, plan);
  const auto without = simulatePolicy(inst, policy, 4000, 3);
  inst.unitCost = 1.0;
  const auto with = simulatePolicy(inst, policy, 4000, 3);
  CHECK(with.meanCost > without.meanCost);
}

}  // TEST_SUITE
