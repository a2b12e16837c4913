#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rss/Bench.hpp"
#include "rss/Errors.hpp"
#include "rss/Io.hpp"
#include "rss/LowerBounds.hpp"
#include "rss/RsGuidance.hpp"
#include "rss/Sdp.hpp"
#include "rss/Simulator.hpp"
#include "rss/TreeSearch.hpp"

namespace {

rss::Instance toyInstance() {
  rss::Instance instance;
  instance.periods = 3;
  instance.demandMeans = {20, 30, 40};
  instance.fixedOrderCost = 30;
  instance.reviewCost = 10;
  instance.holdingCost = 1;
  instance.penaltyCost = 10;
  return instance;
}

rss::DescentStrategy makeStrategy(const std::string& name, std::uint64_t seed,
                                  const rss::SdpSolver& solver) {
  if (name == "det1") return rss::DescentStrategy::deterministic(rss::DescentOrder::OneFirst);
  if (name == "det0") return rss::DescentStrategy::deterministic(rss::DescentOrder::ZeroFirst);
  if (name == "rand") return rss::DescentStrategy::randomized(seed);
  if (name == "guided") return rss::DescentStrategy::guided(rss::computeRsPlan(solver), seed);
  throw CLI::ValidationError("--strategy", "expected one of det1, det0, rand, guided");
}

void printPolicy(const rss::Policy& policy) {
  if (policy.reviews.empty()) {
    std::printf("policy: no reviews\n");
    return;
  }
  std::printf("policy (period, s, S):\n");
  for (const auto& review : policy.reviews) {
    if (review.hasOrderRegion) {
      std::printf("  R=%d  s=%d  S=%d\n", review.period, review.reorderLevel, review.orderUpTo);
    } else {
      std::printf("  R=%d  (review only, never orders)\n", review.period);
    }
  }
}

void printStats(const rss::SearchStats& stats) {
  std::printf("nodes computed : %lld\n", static_cast<long long>(stats.nodesComputed));
  std::printf("nodes pruned   : %lld\n", static_cast<long long>(stats.nodesPruned));
  std::printf("pruning %%      : %.2f (visited), %.2f (full tree of %lld)\n",
              stats.pruningPctVisited(), stats.pruningPctFullTree(),
              static_cast<long long>(stats.totalNodes));
}

int runSolve(const std::string& path, const std::string& strategyName, std::uint64_t seed,
             bool noBounds, double epsilon, const std::string& outPath) {
  rss::Instance instance = rss::loadInstance(path);
  if (epsilon > 0.0) instance.pmfEpsilon = epsilon;
  rss::SdpSolver solver(instance);
  const auto strategy = makeStrategy(strategyName, seed, solver);
  const auto start = std::chrono::steady_clock::now();
  const auto result = rss::bnbSolve(solver, strategy, !noBounds);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::printf("plan           : %s\n", result.bestPlan.toString().c_str());
  std::printf("expected cost  : %.4f\n", result.bestCost);
  printPolicy(result.policy);
  printStats(result.stats);
  std::printf("seconds        : %.3f\n", seconds);

  if (!outPath.empty()) {
    rss::savePolicy(result.policy, result.bestPlan, result.bestCost, outPath);
    std::printf("policy written : %s\n", outPath.c_str());
  }
  return 0;
}

int runBaseline(const std::string& path, double epsilon, int cap, const std::string& outPath) {
  rss::Instance instance = rss::loadInstance(path);
  if (epsilon > 0.0) instance.pmfEpsilon = epsilon;
  if (instance.periods > 14) {
    std::fprintf(stderr,
                 "warning: exhaustive enumeration over %d periods solves %lld plans\n",
                 instance.periods, 1LL << instance.periods);
  }
  rss::SdpSolver solver(instance);
  const auto start = std::chrono::steady_clock::now();
  const auto result = rss::enumerateBaseline(solver, cap);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::printf("plan           : %s\n", result.bestPlan.toString().c_str());
  std::printf("expected cost  : %.4f\n", result.bestCost);
  if (instance.periods <= 6) {
    std::printf("all plans:\n");
    for (std::uint64_t mask = 0; mask < result.allCosts.size(); ++mask) {
      const auto plan = rss::ReviewPlan::fromMask(mask, instance.periods);
      std::printf("  %s  %.1f\n", plan.toString().c_str(), result.allCosts[mask]);
    }
  }
  std::printf("seconds        : %.3f\n", seconds);

  if (!outPath.empty()) {
    nlohmann::json doc;
    doc["best_plan"] = std::vector<int>(result.bestPlan.gamma.begin(),
                                        result.bestPlan.gamma.end());
    doc["best_cost"] = result.bestCost;
    doc["all_costs"] = result.allCosts;
    std::ofstream out(outPath);
    out << doc.dump(2) << "\n";
    std::printf("table written  : %s\n", outPath.c_str());
  }
  return 0;
}

int runBench(int horizon, const std::string& methodsCsv, std::uint64_t seed, double epsilon,
             int jobs, const std::string& outPath) {
  rss::TestbedSpec spec;
  spec.periods = horizon;
  spec.seed = seed;
  if (epsilon > 0.0) spec.pmfEpsilon = epsilon;
  spec.workers = jobs;
  spec.outPath = outPath;
  spec.methods.clear();
  std::stringstream stream(methodsCsv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) spec.methods.push_back(rss::stringToMethod(token));
  }

  const auto report = rss::runTestbed(spec);
  std::printf("%zu rows -> %s (+ %s.aggregate.csv)\n", report.rows.size(), outPath.c_str(),
              outPath.c_str());
  return 0;
}

int runSimulate(const std::string& path, const std::string& policyPath, std::int64_t runs,
                std::uint64_t seed, const std::string& outPath) {
  const rss::Instance instance = rss::loadInstance(path);
  const rss::Policy policy = rss::loadPolicy(policyPath);
  const auto report = rss::simulatePolicy(instance, policy, runs, seed);
  std::printf("runs           : %lld\n", static_cast<long long>(report.runs));
  std::printf("mean cost      : %.4f\n", report.meanCost);
  std::printf("std error      : %.4f\n", report.stdError);

  if (!outPath.empty()) {
    nlohmann::json doc;
    doc["runs"] = report.runs;
    doc["mean_cost"] = report.meanCost;
    doc["std_error"] = report.stdError;
    std::ofstream out(outPath);
    out << doc.dump(2) << "\n";
  }
  return 0;
}

int runToy() {
  const rss::Instance instance = toyInstance();
  rss::SdpSolver solver(instance);

  std::printf("3-period example: means (20, 30, 40), K=30, W=10, h=1, b=10, I0=0\n\n");
  const auto baseline = rss::enumerateBaseline(solver);
  std::printf("g1 g2 g3  expected cost\n");
  for (std::uint64_t mask = 0; mask < baseline.allCosts.size(); ++mask) {
    const auto plan = rss::ReviewPlan::fromMask(mask, instance.periods);
    std::printf(" %d  %d  %d   %.1f%s\n", plan.gamma[0], plan.gamma[1], plan.gamma[2],
                baseline.allCosts[mask], plan == baseline.bestPlan ? "  <- optimal" : "");
  }

  std::printf("\nbranch-and-bound, gamma=1-first descent, DP bounds on:\n");
  const auto result =
      rss::bnbSolve(solver, rss::DescentStrategy::deterministic(rss::DescentOrder::OneFirst));
  for (const auto& [plan, cost] : result.stats.incumbentTrace) {
    std::printf("  incumbent %s  %.1f\n", plan.toString().c_str(), cost);
  }
  for (const auto& event : result.stats.pruneTrace) {
    std::printf("  pruned subtree at stage %d, bound %.1f\n", event.period, event.boundValue);
  }
  std::printf("optimal plan %s, cost %.1f\n", result.bestPlan.toString().c_str(),
              result.bestCost);
  printPolicy(result.policy);
  std::printf("pruning: %lld/%lld = %.2f%%\n", static_cast<long long>(result.stats.nodesPruned),
              static_cast<long long>(result.stats.nodesComputed + result.stats.nodesPruned),
              result.stats.pruningPctVisited());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(R,s,S) inventory policy solver"};
  app.require_subcommand(1);

  std::string instancePath, outPath, policyPath;
  std::string strategyName = "det1";
  std::string methodsCsv = "bnb,bnb-guided";
  std::uint64_t seed = 0;
  bool noBounds = false;
  double epsilon = 0.0;  // 0 keeps the instance file's value
  int cap = 20;
  int horizon = 10;
  int jobs = 1;
  std::int64_t runs = 100000;

  auto* solve = app.add_subcommand("solve", "Optimal (R,s,S) policy by branch-and-bound");
  solve->add_option("instance", instancePath, "Instance file")->required();
  solve->add_option("--strategy", strategyName, "Descent: det1, det0, rand, guided");
  solve->add_option("--seed", seed, "Seed for rand/guided descents");
  solve->add_flag("--no-bounds", noBounds, "Disable the DP lower bounds");
  solve->add_option("--epsilon", epsilon, "Override the pmf truncation epsilon");
  solve->add_option("--out", outPath, "Write the policy as JSON");

  auto* baseline = app.add_subcommand("baseline", "Exhaustive enumeration of review plans");
  baseline->add_option("instance", instancePath, "Instance file")->required();
  baseline->add_option("--epsilon", epsilon, "Override the pmf truncation epsilon");
  baseline->add_option("--cap", cap, "Horizon cap for enumeration");
  baseline->add_option("--out", outPath, "Write the full cost table as JSON");

  auto* bench = app.add_subcommand("bench", "Factorial cost/pattern testbed, CSV output");
  bench->add_option("--horizon", horizon, "Planning horizon");
  bench->add_option("--methods", methodsCsv,
                    "Comma-separated: baseline, bnb, bnb-rand, bnb-guided");
  bench->add_option("--seed", seed, "Base seed for the grid");
  bench->add_option("--epsilon", epsilon, "pmf truncation epsilon");
  bench->add_option("--jobs", jobs, "Parallel workers over grid cells");
  bench->add_option("--out", outPath, "Output CSV path")->required();

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo evaluation of a policy file");
  simulate->add_option("instance", instancePath, "Instance file")->required();
  simulate->add_option("--policy", policyPath, "Policy JSON from solve --out")->required();
  simulate->add_option("--runs", runs, "Simulation runs");
  simulate->add_option("--seed", seed, "Base seed");
  simulate->add_option("--out", outPath, "Write the report as JSON");

  auto* toy = app.add_subcommand("toy", "Solve the built-in 3-period example");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      return runSolve(instancePath, strategyName, seed, noBounds, epsilon, outPath);
    }
    if (baseline->parsed()) return runBaseline(instancePath, epsilon, cap, outPath);
    if (bench->parsed()) return runBench(horizon, methodsCsv, seed, epsilon, jobs, outPath);
    if (simulate->parsed()) return runSimulate(instancePath, policyPath, runs, seed, outPath);
    if (toy->parsed()) return runToy();
  } catch (const rss::ParseError& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
