#ifndef RSS_GRID_HPP
#define RSS_GRID_HPP

#include <cstdint>
#include <vector>

#include "rss/Demand.hpp"
#include "rss/Instance.hpp"

namespace rss {

/// Integer inventory grid covering every level reachable under any review
/// plan and any demand path inside the truncated supports.
///
/// stageLow[t-1] is the lowest level the system can occupy when period t
/// opens (t = 1..T+1); levels below it are never evaluated at that stage.
struct InventoryGrid {
  int minLevel = 0;
  int maxLevel = 0;
  std::vector<int> stageLow;

  int size() const { return maxLevel - minLevel + 1; }
  int index(int level) const { return level - minLevel; }
  int level(int index) const { return minLevel + index; }
  int lowAt(int period) const { return stageLow[period - 1]; }
};

/// Builds the grid from the truncated demand supports.
/// Throws ResourceLimitError when the grid exceeds maxStatesPerStage.
InventoryGrid buildGrid(const Instance& instance, const std::vector<DemandDistribution>& demands,
                        std::int64_t maxStatesPerStage = 1'000'000);

/// Convenience overload that discretises the demands itself.
InventoryGrid buildGrid(const Instance& instance, std::int64_t maxStatesPerStage = 1'000'000);

}  // namespace rss

#endif  // RSS_GRID_HPP
