#include "rss/Bench.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rss/Errors.hpp"
#include "rss/RsGuidance.hpp"
#include "rss/TreeSearch.hpp"

namespace rss {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int uniformInt(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

double uniformReal(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(rng);
}

std::string csvNumber(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.10g", value);
  return buffer;
}

}  // namespace

Instance generateInstance(const InstanceSpec& spec, std::uint64_t seed) {
  if (spec.periods < 1) throw std::invalid_argument("generateInstance: periods must be >= 1");
  if (spec.fixedOrderCostRange.first > spec.fixedOrderCostRange.second ||
      spec.reviewCostRange.first > spec.reviewCostRange.second ||
      spec.penaltyCostRange.first > spec.penaltyCostRange.second ||
      spec.meanRange.first > spec.meanRange.second) {
    throw std::invalid_argument("generateInstance: empty range");
  }

  std::mt19937_64 rng(seed);
  Instance instance;
  instance.periods = spec.periods;
  instance.fixedOrderCost =
      uniformInt(rng, spec.fixedOrderCostRange.first, spec.fixedOrderCostRange.second);
  instance.reviewCost = uniformInt(rng, spec.reviewCostRange.first, spec.reviewCostRange.second);
  instance.penaltyCost =
      uniformReal(rng, spec.penaltyCostRange.first, spec.penaltyCostRange.second);
  instance.holdingCost = spec.holdingCost;
  instance.unitCost = spec.unitCost;
  instance.backorderFraction = spec.backorderFraction;
  instance.initialInventory = spec.initialInventory;
  instance.pmfEpsilon = spec.pmfEpsilon;

  if (spec.explicitMeans) {
    instance.demandMeans = *spec.explicitMeans;
  } else if (spec.pattern) {
    instance.demandMeans = patternDemands(*spec.pattern, spec.periods, rng());
  } else {
    instance.demandMeans.resize(spec.periods);
    for (double& mean : instance.demandMeans) {
      mean = uniformReal(rng, spec.meanRange.first, spec.meanRange.second);
    }
  }
  instance.validate();
  return instance;
}

std::string methodToString(Method method) {
  switch (method) {
    case Method::Baseline:
      return "baseline";
    case Method::Bnb:
      return "bnb";
    case Method::BnbRand:
      return "bnb-rand";
    case Method::BnbGuided:
      return "bnb-guided";
    default:
      return "unknown";
  }
}

Method stringToMethod(const std::string& str) {
  if (str == "baseline") return Method::Baseline;
  if (str == "bnb") return Method::Bnb;
  if (str == "bnb-rand") return Method::BnbRand;
  if (str == "bnb-guided") return Method::BnbGuided;
  throw std::invalid_argument("Invalid method: " + str +
                              ". Available options are: "
                              "baseline, bnb, bnb-rand, bnb-guided.");
}

std::string BenchReport::toCsv() const {
  std::ostringstream out;
  out << "instance_id,T,K,W,b,pattern,method,cost,nodes_computed,nodes_pruned,"
         "pruning_pct_visited,pruning_pct_fulltree,n_reviews,seconds\n";
  for (const BenchRow& row : rows) {
    out << row.instanceId << ',' << row.periods << ',' << csvNumber(row.fixedOrderCost) << ','
        << csvNumber(row.reviewCost) << ',' << csvNumber(row.penaltyCost) << ',' << row.pattern
        << ',' << row.method << ',' << csvNumber(row.cost) << ',' << row.nodesComputed << ','
        << row.nodesPruned << ',' << csvNumber(row.pruningPctVisited) << ','
        << csvNumber(row.pruningPctFullTree) << ',' << row.reviewCount << ','
        << csvNumber(row.seconds) << '\n';
  }
  return out.str();
}

std::string BenchReport::aggregateCsv() const {
  struct Bucket {
    int count = 0;
    double cost = 0.0, pruned = 0.0, reviews = 0.0, seconds = 0.0;
  };
  std::map<std::string, Bucket> buckets;
  for (const BenchRow& row : rows) {
    const std::string groups[4] = {"K," + csvNumber(row.fixedOrderCost),
                                   "W," + csvNumber(row.reviewCost),
                                   "b," + csvNumber(row.penaltyCost), "pattern," + row.pattern};
    for (const std::string& group : groups) {
      Bucket& bucket = buckets[group + "," + row.method];
      ++bucket.count;
      bucket.cost += row.cost;
      bucket.pruned += row.pruningPctFullTree;
      bucket.reviews += row.reviewCount;
      bucket.seconds += row.seconds;
    }
  }
  std::ostringstream out;
  out << "group,value,method,mean_cost,mean_pruning_pct_fulltree,mean_n_reviews,mean_seconds\n";
  for (const auto& [key, bucket] : buckets) {
    const double n = bucket.count;
    out << key << ',' << csvNumber(bucket.cost / n) << ',' << csvNumber(bucket.pruned / n) << ','
        << csvNumber(bucket.reviews / n) << ',' << csvNumber(bucket.seconds / n) << '\n';
  }
  return out.str();
}

namespace {

BenchRow runMethod(const SdpSolver& solver, Method method, std::uint64_t seed, int baselineCap) {
  BenchRow row;
  row.method = methodToString(method);
  const auto start = std::chrono::steady_clock::now();
  switch (method) {
    case Method::Baseline: {
      const BaselineResult result = enumerateBaseline(solver, baselineCap);
      row.cost = result.bestCost;
      row.reviewCount = result.bestPlan.reviewCount();
      row.nodesComputed = solver.stageSolveCount();
      break;
    }
    case Method::Bnb:
    case Method::BnbRand:
    case Method::BnbGuided: {
      // the plain bnb method branches on gamma = 0 first
      DescentStrategy strategy = DescentStrategy::deterministic(DescentOrder::ZeroFirst);
      if (method == Method::BnbRand) {
        strategy = DescentStrategy::randomized(seed);
      } else if (method == Method::BnbGuided) {
        strategy = DescentStrategy::guided(computeRsPlan(solver), seed);
      }
      const BnbResult result = bnbSolve(solver, strategy, true);
      row.cost = result.bestCost;
      row.reviewCount = result.bestPlan.reviewCount();
      row.nodesComputed = result.stats.nodesComputed;
      row.nodesPruned = result.stats.nodesPruned;
      row.pruningPctVisited = result.stats.pruningPctVisited();
      row.pruningPctFullTree = result.stats.pruningPctFullTree();
      break;
    }
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

}  // namespace

BenchReport runTestbed(const TestbedSpec& spec) {
  struct Cell {
    double fixedOrderCost, reviewCost, penaltyCost;
    PatternKind pattern;
    std::uint64_t seed;
    std::string id;
  };
  std::vector<Cell> cells;
  std::uint64_t cellIndex = 0;
  for (double orderCost : spec.fixedOrderCosts) {
    for (double reviewCost : spec.reviewCosts) {
      for (double penaltyCost : spec.penaltyCosts) {
        for (PatternKind pattern : spec.patterns) {
          Cell cell{orderCost, reviewCost, penaltyCost, pattern, spec.seed + cellIndex, ""};
          std::ostringstream id;
          id << "T" << spec.periods << "-K" << csvNumber(orderCost) << "-W"
             << csvNumber(reviewCost) << "-b" << csvNumber(penaltyCost) << "-"
             << patternKindToString(pattern);
          cell.id = id.str();
          cells.push_back(cell);
          ++cellIndex;
        }
      }
    }
  }

  const std::size_t methodCount = spec.methods.size();
  std::vector<BenchRow> rows(cells.size() * methodCount);

  auto runCell = [&](std::size_t index) {
    const Cell& cell = cells[index];
    Instance instance;
    instance.periods = spec.periods;
    instance.demandMeans = patternDemands(cell.pattern, spec.periods, cell.seed);
    instance.fixedOrderCost = cell.fixedOrderCost;
    instance.reviewCost = cell.reviewCost;
    instance.holdingCost = 1.0;
    instance.penaltyCost = cell.penaltyCost;
    instance.pmfEpsilon = spec.pmfEpsilon;

    for (std::size_t m = 0; m < methodCount; ++m) {
      // a fresh solver per method keeps the stage-solve counter per run
      SdpSolver solver(instance);
      BenchRow row = runMethod(solver, spec.methods[m], cell.seed, spec.baselineCap);
      row.instanceId = cell.id;
      row.periods = spec.periods;
      row.fixedOrderCost = cell.fixedOrderCost;
      row.reviewCost = cell.reviewCost;
      row.penaltyCost = cell.penaltyCost;
      row.pattern = patternKindToString(cell.pattern);
      rows[index * methodCount + m] = row;
    }
  };

  const int workers = std::max(1, spec.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < cells.size(); ++i) runCell(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
          runCell(i);
        }
      });
    }
    for (auto& thread : pool) thread.join();
  }

  BenchReport report;
  report.rows = std::move(rows);

  if (!spec.outPath.empty()) {
    std::ofstream out(spec.outPath);
    if (!out) throw std::runtime_error("runTestbed: cannot write " + spec.outPath);
    out << report.toCsv();
    std::ofstream agg(spec.outPath + ".aggregate.csv");
    if (!agg) throw std::runtime_error("runTestbed: cannot write " + spec.outPath + ".aggregate.csv");
    agg << report.aggregateCsv();
  }
  return report;
}

}  // namespace rss
