#ifndef RSS_BENCH_HPP
#define RSS_BENCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rss/Demand.hpp"
#include "rss/Instance.hpp"

namespace rss {

/// Random-instance generator specification. Demand comes from explicit
/// means, a seasonal pattern, or per-period uniform draws; costs come from
/// (possibly degenerate) uniform ranges.
struct InstanceSpec {
  int periods = 10;
  std::optional<std::vector<double>> explicitMeans;
  std::optional<PatternKind> pattern;
  std::pair<double, double> meanRange{30.0, 70.0};

  std::pair<int, int> fixedOrderCostRange{80, 320};  // K, integer draws
  std::pair<int, int> reviewCostRange{80, 320};      // W, integer draws
  std::pair<double, double> penaltyCostRange{4.0, 16.0};
  double holdingCost = 1.0;
  double unitCost = 0.0;
  double backorderFraction = 1.0;
  int initialInventory = 0;
  double pmfEpsilon = 1e-4;
};

/// Deterministic in the seed; draw order is K, W, b, then the means.
Instance generateInstance(const InstanceSpec& spec, std::uint64_t seed);

enum class Method { Baseline, Bnb, BnbRand, BnbGuided };

std::string methodToString(Method method);
Method stringToMethod(const std::string& str);

struct BenchRow {
  std::string instanceId;
  int periods = 0;
  double fixedOrderCost = 0.0;
  double reviewCost = 0.0;
  double penaltyCost = 0.0;
  std::string pattern;
  std::string method;
  double cost = 0.0;
  std::int64_t nodesComputed = 0;
  std::int64_t nodesPruned = 0;
  double pruningPctVisited = 0.0;
  double pruningPctFullTree = 0.0;
  int reviewCount = 0;
  double seconds = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  std::string toCsv() const;
  /// Mean cost / pruning / reviews / time grouped by K, W, b and pattern.
  std::string aggregateCsv() const;
};

/// Full factorial testbed: K x W x b x pattern at one horizon, one instance
/// per cell, each requested method run on every instance. Writes the
/// per-row CSV to outPath and the grouped summary to outPath + ".aggregate.csv"
/// when outPath is non-empty.
struct TestbedSpec {
  int periods = 10;
  std::vector<double> fixedOrderCosts{80.0, 160.0, 320.0};
  std::vector<double> reviewCosts{80.0, 160.0, 320.0};
  std::vector<double> penaltyCosts{4.0, 8.0, 16.0};
  std::vector<PatternKind> patterns{PatternKind::STA,  PatternKind::INC,
                                    PatternKind::DEC,  PatternKind::LCY1,
                                    PatternKind::LCY2, PatternKind::RAND};
  std::vector<Method> methods{Method::Bnb, Method::BnbGuided};
  std::uint64_t seed = 0;
  double pmfEpsilon = 1e-4;
  int baselineCap = 20;
  int workers = 1;
  std::string outPath;
};

BenchReport runTestbed(const TestbedSpec& spec);

}  // namespace rss

#endif  // RSS_BENCH_HPP
