#include "rss/Grid.hpp"

#include <algorithm>
#include <string>

#include "rss/Errors.hpp"

namespace rss {

InventoryGrid buildGrid(const Instance& instance, const std::vector<DemandDistribution>& demands,
                        std::int64_t maxStatesPerStage) {
  instance.validate();

  std::int64_t totalSupport = 0;
  for (const auto& d : demands) totalSupport += d.supportMax;

  InventoryGrid grid;
  const int i0 = instance.initialInventory;
  grid.minLevel = static_cast<int>(std::min(0, i0) - totalSupport);
  grid.maxLevel = static_cast<int>(std::max(i0, 0) + totalSupport);

  const std::int64_t states = static_cast<std::int64_t>(grid.maxLevel) - grid.minLevel + 1;
  if (states > maxStatesPerStage) {
    throw ResourceLimitError("buildGrid: " + std::to_string(states) +
                             " states per stage exceed the cap of " +
                             std::to_string(maxStatesPerStage));
  }

  grid.stageLow.resize(instance.periods + 1);
  int low = std::min(0, i0);
  for (int t = 1; t <= instance.periods + 1; ++t) {
    grid.stageLow[t - 1] = low;
    if (t <= instance.periods) low -= demands[t - 1].supportMax;
  }
  return grid;
}

InventoryGrid buildGrid(const Instance& instance, std::int64_t maxStatesPerStage) {
  instance.validate();
  std::vector<DemandDistribution> demands;
  demands.reserve(instance.periods);
  for (double mean : instance.demandMeans) {
    demands.push_back(truncatedPoissonPmf(mean, instance.pmfEpsilon));
  }
  return buildGrid(instance, demands, maxStatesPerStage);
}

}  // namespace rss
